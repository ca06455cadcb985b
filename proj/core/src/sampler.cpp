#include "qvol/sampler.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <thread>

namespace qvol {

PlanePartition::PlanePartition(int N, std::vector<int> vals) : N_(N), a_(std::move(vals)) {
    if (a_.size() != static_cast<size_t>(N) * N)
        throw std::invalid_argument("PlanePartition: wrong size");
    if (!valid()) throw std::invalid_argument("PlanePartition: monotonicity violated");
}

long PlanePartition::volume() const {
    long v = 0;
    for (int x : a_) v += x;
    return v;
}

bool PlanePartition::valid() const {
    for (int i = 0; i < N_; ++i)
        for (int j = 0; j < N_; ++j) {
            int v = at(i, j);
            if (v < 0 || v > N_) return false;
            if (i + 1 < N_ && at(i + 1, j) > v) return false;
            if (j + 1 < N_ && at(i, j + 1) > v) return false;
        }
    return true;
}

bool PlanePartition::move_allowed(int i, int j, int v) const {
    if (v < 0 || v > N_) return false;
    if (i > 0 && at(i - 1, j) < v) return false;
    if (j > 0 && at(i, j - 1) < v) return false;
    if (i + 1 < N_ && at(i + 1, j) > v) return false;
    if (j + 1 < N_ && at(i, j + 1) > v) return false;
    return true;
}

PlanePartition PlanePartition::complement() const {
    PlanePartition r(N_);
    for (int i = 0; i < N_; ++i)
        for (int j = 0; j < N_; ++j) r.at(i, j) = N_ - at(N_ - 1 - i, N_ - 1 - j);
    return r;
}

bool PathEnsemble::valid() const {
    for (int j = 0; j < N; ++j) {
        if (pos[j][0] != j || pos[j][2 * N] != N + j) return false;
        for (int m = 0; m < 2 * N; ++m) {
            int d = pos[j][m + 1] - pos[j][m];
            if (d != 0 && d != 1) return false;
        }
    }
    for (int j = 0; j + 1 < N; ++j)
        for (int m = 0; m <= 2 * N; ++m)
            if (pos[j][m] >= pos[j + 1][m]) return false;
    return true;
}

long PathEnsemble::weight_exponent() const {
    long e = 0;
    for (int j = 0; j < N; ++j)
        for (int m = 0; m < 2 * N; ++m)
            if (pos[j][m + 1] == pos[j][m] + 1) e += m + 1;
    return e;
}

bool PathEnsemble::occupied(int x, int y) const {
    for (int j = 0; j < N; ++j)
        if (pos[j][x] == y) return true;
    return false;
}

namespace {

// diagonal slice t = m - N of pi, as a partition (weakly decreasing)
std::vector<int> diagonal_slice(const PlanePartition& pp, int t) {
    const int N = pp.N();
    std::vector<int> s;
    if (t >= 0)
        for (int i = 0; i + t < N; ++i) s.push_back(pp.at(i, i + t));
    else
        for (int i = -t; i < N; ++i) s.push_back(pp.at(i, i + t));
    return s;
}

// conjugate partition, padded/truncated to len parts
std::vector<int> conjugate(const std::vector<int>& lam, int len) {
    std::vector<int> c(len, 0);
    for (int k = 0; k < len; ++k)
        for (int x : lam)
            if (x > k) ++c[k];
    return c;
}

}  // namespace

PathEnsemble to_paths(const PlanePartition& pp) {
    if (!pp.valid()) throw std::invalid_argument("to_paths: invalid plane partition");
    const int N = pp.N();
    PathEnsemble pe;
    pe.N = N;
    pe.pos.assign(N, std::vector<int>(2 * N + 1, 0));
    for (int m = 0; m <= 2 * N; ++m) {
        auto mu = conjugate(diagonal_slice(pp, m - N), N);
        for (int j = 0; j < N; ++j) pe.pos[j][m] = j + std::min(m, N) - mu[j];
    }
    if (!pe.valid()) throw std::logic_error("to_paths: produced invalid ensemble");
    return pe;
}

PlanePartition from_paths(const PathEnsemble& pe) {
    if (!pe.valid()) throw std::invalid_argument("from_paths: invalid path ensemble");
    const int N = pe.N;
    PlanePartition pp(N);
    for (int t = -(N - 1); t <= N - 1; ++t) {
        const int m = t + N;
        // mu_{j+1} = j + min(m, N) - x_j^m, then conjugate back
        std::vector<int> mu(N);
        for (int j = 0; j < N; ++j) mu[j] = j + std::min(m, N) - pe.pos[j][m];
        const int len = N - std::abs(t);
        auto lam = conjugate(mu, len);
        if (t >= 0)
            for (int i = 0; i + t < N; ++i) pp.at(i, i + t) = lam[i];
        else
            for (int i = -t; i < N; ++i) pp.at(i, i + t) = lam[i + t];
    }
    if (!pp.valid()) throw std::logic_error("from_paths: produced invalid plane partition");
    return pp;
}

namespace {

void enumerate_rec(PlanePartition& pp, int cell, Ensemble& out) {
    const int N = pp.N();
    if (cell == N * N) {
        out.states.push_back(pp);
        Rational w = rational_pow(out.q, -pp.volume());
        out.weights.push_back(w);
        out.Z += w;
        return;
    }
    const int i = cell / N, j = cell % N;
    const int cap = std::min(i > 0 ? pp.at(i - 1, j) : N, j > 0 ? pp.at(i, j - 1) : N);
    for (int v = 0; v <= cap; ++v) {
        pp.at(i, j) = v;
        enumerate_rec(pp, cell + 1, out);
    }
    pp.at(i, j) = 0;
}

}  // namespace

Ensemble enumerate_tilings(int N, const Rational& q) {
    if (N < 1 || N > 4)
        throw std::invalid_argument("enumerate_tilings: N must be in 1..4 (state count)");
    Ensemble out{N, q, {}, {}, Rational(0)};
    PlanePartition pp(N);
    enumerate_rec(pp, 0, out);
    return out;
}

Rational Ensemble::joint_occupancy(const std::vector<std::pair<int, int>>& pts) const {
    Rational acc(0);
    for (size_t s = 0; s < states.size(); ++s) {
        auto pe = to_paths(states[s]);
        bool all = true;
        for (auto& [x, y] : pts)
            if (!pe.occupied(x, y)) {
                all = false;
                break;
            }
        if (all) acc += weights[s];
    }
    return acc / Z;
}

PlanePartition glauber_step(const PlanePartition& state, SplitMix64& rng, double q) {
    if (q <= 1.0) throw std::invalid_argument("glauber_step: needs q > 1");
    const int N = state.N();
    const int i = static_cast<int>(rng.below(N));
    const int j = static_cast<int>(rng.below(N));
    const bool add = (rng.next() & 1ULL) != 0;
    const int v = state.at(i, j) + (add ? 1 : -1);
    if (!state.move_allowed(i, j, v)) return state;
    if (add && rng.uniform() >= 1.0 / q) return state;  // ratio q^{-1} for adding a box
    PlanePartition next = state;
    next.at(i, j) = v;
    return next;
}

PlanePartition sample(const SampleParams& sp) {
    SplitMix64 rng(sp.seed);
    PlanePartition st(sp.N);
    const long sweeps = sp.sweeps > 0 ? sp.sweeps : static_cast<long>(sp.N) * sp.N * sp.N;
    const long touches = sweeps * sp.N * sp.N;
    for (long t = 0; t < touches; ++t) st = glauber_step(st, rng, sp.q);
    return st;
}

TileType classify_site(const PathEnsemble& pe, int m, int y) {
    for (int j = 0; j < pe.N; ++j)
        if (pe.pos[j][m] == y)
            return pe.pos[j][m + 1] == y + 1 ? TileType::I : TileType::II;
    return TileType::III;
}

double TilingStats::freq(int m, int y, TileType t) const {
    auto it = counts.find({m, y});
    if (it == counts.end() || samples == 0) return 0.0;
    return static_cast<double>(it->second[static_cast<int>(t)]) / static_cast<double>(samples);
}

namespace {

void accumulate(TilingStats& st, const PlanePartition& pp) {
    auto pe = to_paths(pp);
    const int N = pe.N;
    for (int m = 0; m < 2 * N; ++m) {
        const int lo = std::max(0, m - N), hi = std::min(m + N, 2 * N);
        for (int y = lo; y < hi; ++y)
            st.counts[{m, y}][static_cast<int>(classify_site(pe, m, y))]++;
    }
    st.mean_volume += static_cast<double>(pp.volume());
}

}  // namespace

TilingStats gather_stats(int N, double q, long sweeps, long nsamples, uint64_t seed, int chains) {
    TilingStats st;
    st.N = N;
    st.seed = seed;
    chains = std::max(1, chains);
    std::vector<TilingStats> parts(chains);
    std::vector<std::thread> workers;
    SplitMix64 root(seed);
    std::vector<SplitMix64> streams;
    for (int ch = 0; ch < chains; ++ch) streams.push_back(root.split());
    const long per = (nsamples + chains - 1) / chains;
    for (int ch = 0; ch < chains; ++ch) {
        workers.emplace_back([&, ch]() {
            SplitMix64 rng = streams[ch];
            PlanePartition cur(N);
            const long burn = (sweeps > 0 ? sweeps : static_cast<long>(N) * N * N) *
                              static_cast<long>(N) * N;
            for (long t = 0; t < burn; ++t) cur = glauber_step(cur, rng, q);
            parts[ch].N = N;
            for (long s = 0; s < per; ++s) {
                // one sweep between recorded samples
                for (long t = 0; t < static_cast<long>(N) * N; ++t)
                    cur = glauber_step(cur, rng, q);
                accumulate(parts[ch], cur);
                parts[ch].samples++;
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& p : parts) {
        st.samples += p.samples;
        st.mean_volume += p.mean_volume;
        for (auto& [k, v] : p.counts) {
            auto& dst = st.counts[k];
            for (int t = 0; t < 3; ++t) dst[t] += v[t];
        }
    }
    if (st.samples > 0) st.mean_volume /= static_cast<double>(st.samples);
    return st;
}

}  // namespace qvol
