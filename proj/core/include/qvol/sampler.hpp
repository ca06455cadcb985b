#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qvol/rational.hpp"
#include "qvol/rng.hpp"

namespace qvol {

// Boxed plane partition: N x N array, 0 <= pi_ij <= N, weakly decreasing
// along rows and columns. Row-major storage.
class PlanePartition {
  public:
    explicit PlanePartition(int N) : N_(N), a_(static_cast<size_t>(N) * N, 0) {}
    PlanePartition(int N, std::vector<int> vals);

    int N() const { return N_; }
    int at(int i, int j) const { return a_[static_cast<size_t>(i) * N_ + j]; }
    int& at(int i, int j) { return a_[static_cast<size_t>(i) * N_ + j]; }
    long volume() const;
    bool valid() const;
    // entry change pi_ij -> v keeps monotonicity (bounds included)
    bool move_allowed(int i, int j, int v) const;
    // complement: rotate the box; |pi| + |~pi| = N^3
    PlanePartition complement() const;
    bool operator<(const PlanePartition& o) const { return a_ < o.a_; }
    bool operator==(const PlanePartition& o) const { return a_ == o.a_; }

  private:
    int N_;
    std::vector<int> a_;
};

// Non-intersecting path ensemble; pos[j][m] stores x_j^m - 1/2 (integer).
// Invariants: x_j^0 = j + 1/2, x_j^{2N} = N + j + 1/2, unit or zero steps,
// strict interlacing in j.
struct PathEnsemble {
    int N = 0;
    std::vector<std::vector<int>> pos;  // [path j][column m], m = 0..2N

    bool valid() const;
    // path-weight exponent: sum of (m+1) over all up-steps [m, m+1]
    long weight_exponent() const;
    bool occupied(int x, int y) const;  // a path passes through (x, y + 1/2)
};

PathEnsemble to_paths(const PlanePartition& pp);
PlanePartition from_paths(const PathEnsemble& pe);

// Exhaustive enumeration for tiny N (state counts: 2, 20, 980, 232848).
struct Ensemble {
    int N;
    Rational q;
    std::vector<PlanePartition> states;
    std::vector<Rational> weights;  // q^{-|pi|}
    Rational Z;

    // P(all of the given (x, y) path-points are occupied), exact
    Rational joint_occupancy(const std::vector<std::pair<int, int>>& pts) const;
};
Ensemble enumerate_tilings(int N, const Rational& q);

// One Glauber/Metropolis touch: uniform site and direction, accept per
// min(1, q^{-+1}) toward the q^{-Volume} measure. Rejected proposals return
// the input state.
PlanePartition glauber_step(const PlanePartition& state, SplitMix64& rng, double q);

struct SampleParams {
    int N = 8;
    double q = 1.1;
    long sweeps = 0;  // 0 -> default N^3
    uint64_t seed = 1;
};
// Deterministic given seed: burn-in of `sweeps` full sweeps (N^2 touches each)
// starting from the empty partition.
PlanePartition sample(const SampleParams& sp);

// Per-site tile-type classification. Site (m, y): column interval m in
// 0..2N-1, slot y + 1/2. An occupied slot is type I (up-step) or II (flat);
// an empty slot is type III.
enum class TileType { I, II, III };
TileType classify_site(const PathEnsemble& pe, int m, int y);

struct TilingStats {
    int N = 0;
    long samples = 0;
    uint64_t seed = 0;
    // site -> counts; frequencies per site sum to 1
    std::map<std::pair<int, int>, std::array<long, 3>> counts;
    double mean_volume = 0.0;

    double freq(int m, int y, TileType t) const;
};
TilingStats gather_stats(int N, double q, long sweeps, long nsamples, uint64_t seed,
                         int chains = 1);

}  // namespace qvol
