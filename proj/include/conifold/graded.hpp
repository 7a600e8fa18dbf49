#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <conifold/binary_form.hpp>
#include <conifold/matrix.hpp>
#include <conifold/rng.hpp>

namespace conifold {

// A graded map  (+)_j R(src_j)  ->  (+)_i R(tgt_i)  of free modules over
// R = F[s,t], given by a matrix of binary forms, with two more sources than
// targets and source degrees summing to the target degrees plus 2.  The
// convention R(e)_l = R_{l-e} makes the (j,i) entry a form of degree
// d_ji = src_j - tgt_i, required nonnegative.  The object of interest is the
// kernel: generically a free rank-2 module whose generator degrees read off
// the splitting type of a rank-2 bundle on P^1.
template <class F>
class GradedMapSpec {
public:
    GradedMapSpec(F field, std::vector<int> source_degrees, std::vector<int> target_degrees,
                  std::vector<std::vector<BinaryForm<F>>> forms)
        : field_(field),
          src_(std::move(source_degrees)),
          tgt_(std::move(target_degrees)),
          forms_(std::move(forms)) {
        auto bad = degree_violations(src_, tgt_);
        if (!bad.empty()) throw std::invalid_argument(bad.front());
        if (forms_.size() != src_.size())
            throw std::invalid_argument("need one row of forms per source");
        for (std::size_t j = 0; j < forms_.size(); ++j) {
            if (forms_[j].size() != tgt_.size())
                throw std::invalid_argument("need one form per (source, target) pair");
            for (std::size_t i = 0; i < tgt_.size(); ++i) {
                const int want = src_[j] - tgt_[i];
                if (forms_[j][i].degree() != want)
                    throw std::invalid_argument(
                        "form (" + std::to_string(j) + "," + std::to_string(i) +
                        ") has degree " + std::to_string(forms_[j][i].degree()) +
                        ", expected " + std::to_string(want));
            }
        }
    }

    // Everything that keeps (source_degrees, target_degrees) from being
    // admissible degree data, as messages; empty means admissible.
    static std::vector<std::string> degree_violations(const std::vector<int>& src,
                                                      const std::vector<int>& tgt) {
        std::vector<std::string> out;
        if (tgt.empty()) out.push_back("need at least one target degree");
        if (src.size() != tgt.size() + 2)
            out.push_back("need exactly two more sources than targets (got " +
                          std::to_string(src.size()) + " sources, " +
                          std::to_string(tgt.size()) + " targets)");
        long long ssum = 0, tsum = 0;
        for (int e : src) ssum += e;
        for (int e : tgt) tsum += e;
        if (ssum != tsum + 2)
            out.push_back("source degrees sum to " + std::to_string(ssum) +
                          ", target degrees + 2 give " + std::to_string(tsum + 2));
        for (std::size_t j = 0; j < src.size(); ++j)
            for (std::size_t i = 0; i < tgt.size(); ++i)
                if (src[j] - tgt[i] < 0)
                    out.push_back("entry degree d(" + std::to_string(j) + "," +
                                  std::to_string(i) + ") = " + std::to_string(src[j] - tgt[i]) +
                                  " is negative");
        return out;
    }

    const F& field() const { return field_; }
    int num_sources() const { return static_cast<int>(src_.size()); }
    int num_targets() const { return static_cast<int>(tgt_.size()); }
    const std::vector<int>& source_degrees() const { return src_; }
    const std::vector<int>& target_degrees() const { return tgt_; }
    int source_degree(int j) const { return src_.at(static_cast<std::size_t>(j)); }
    int target_degree(int i) const { return tgt_.at(static_cast<std::size_t>(i)); }
    const BinaryForm<F>& form(int j, int i) const {
        return forms_.at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(i));
    }

private:
    F field_;
    std::vector<int> src_;
    std::vector<int> tgt_;
    std::vector<std::vector<BinaryForm<F>>> forms_;
};

// Matrix of multiplication by f, from forms of degree cofactor_degree to
// forms of degree (deg f + cofactor_degree), bases ordered t^D, t^{D-1}s,
// ..., s^D.  Row r, column c holds the coefficient of s^{r-c} in f.
template <class F>
Matrix<F> convolution_matrix(const BinaryForm<F>& f, int cofactor_degree) {
    if (cofactor_degree < 0) throw std::invalid_argument("cofactor degree must be nonnegative");
    const std::size_t rows = static_cast<std::size_t>(f.degree() + cofactor_degree + 1);
    const std::size_t cols = static_cast<std::size_t>(cofactor_degree + 1);
    Matrix<F> M(f.field(), rows, cols);
    for (std::size_t c = 0; c < cols; ++c)
        for (int k = 0; k <= f.degree(); ++k)
            M.at(c + static_cast<std::size_t>(k), c) = f.coeff(k);
    return M;
}

// The degree-l piece of the graded map as one block matrix.  Source j
// contributes a block of d_j + 1 columns where d_j = l - src_j, none if
// d_j < 0; target i contributes max(0, l - tgt_i + 1) rows.  The kernel of
// this matrix is the degree-l piece of the kernel module.
template <class F>
Matrix<F> assemble_block(const GradedMapSpec<F>& spec, int l) {
    std::vector<int> col_offset, row_offset;
    int cols = 0, rows = 0;
    for (int j = 0; j < spec.num_sources(); ++j) {
        col_offset.push_back(cols);
        const int d = l - spec.source_degree(j);
        if (d >= 0) cols += d + 1;
    }
    for (int i = 0; i < spec.num_targets(); ++i) {
        row_offset.push_back(rows);
        rows += std::max(0, l - spec.target_degree(i) + 1);
    }

    Matrix<F> A(spec.field(), static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (int j = 0; j < spec.num_sources(); ++j) {
        const int d = l - spec.source_degree(j);
        if (d < 0) continue;
        for (int i = 0; i < spec.num_targets(); ++i) {
            if (l - spec.target_degree(i) + 1 <= 0) continue;
            Matrix<F> B = convolution_matrix(spec.form(j, i), d);
            for (std::size_t r = 0; r < B.rows(); ++r)
                for (std::size_t c = 0; c < B.cols(); ++c)
                    A.at(static_cast<std::size_t>(row_offset[static_cast<std::size_t>(i)]) + r,
                         static_cast<std::size_t>(col_offset[static_cast<std::size_t>(j)]) + c) =
                        B.at(r, c);
        }
    }
    return A;
}

// Kernel dimensions per degree over an inclusive window.
struct HilbertProfile {
    int lo = 0;
    std::vector<int> dims;

    int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
    int dim_at(int l) const {
        if (l < lo || l > hi()) throw std::out_of_range("degree outside the profile window");
        return dims[static_cast<std::size_t>(l - lo)];
    }
    bool operator==(const HilbertProfile& o) const { return lo == o.lo && dims == o.dims; }
};

template <class F>
HilbertProfile hilbert_profile(const GradedMapSpec<F>& spec, int window_lo, int window_hi) {
    if (window_hi < window_lo) throw std::invalid_argument("empty profile window");
    HilbertProfile p;
    p.lo = window_lo;
    for (int l = window_lo; l <= window_hi; ++l) {
        Matrix<F> A = assemble_block(spec, l);
        p.dims.push_back(static_cast<int>(A.cols()) - static_cast<int>(rank(A)));
    }
    return p;
}

// The profile a generic map produces: 0 for l <= 0 and 2l beyond.
inline HilbertProfile generic_profile(int window_lo, int window_hi) {
    HilbertProfile p;
    p.lo = window_lo;
    for (int l = window_lo; l <= window_hi; ++l) p.dims.push_back(std::max(0, 2 * l));
    return p;
}

// Window wide enough to locate the first nonzero degree and confirm the
// rank-2 growth for any splitting with top part >= -1.
inline std::pair<int, int> default_window(const std::vector<int>& source_degrees) {
    int top = 2;
    for (int e : source_degrees) top = std::max(top, e + 1);
    return {-1, top};
}

// O(a) (+) O(b) on P^1, a >= b.
struct SplittingType {
    int a = 0;
    int b = 0;
    bool operator==(const SplittingType& o) const { return a == o.a && b == o.b; }
};

// Reads the splitting type off a Hilbert profile: a kernel module free of
// rank 2 with generator degrees w1 <= w2 has dims[l] =
// max(0, l-w1+1) + max(0, l-w2+1), and the associated bundle is
// O(-w1) (+) O(-w2).  Throws domain_error whenever the profile is not that of
// such a module with w1 + w2 = 2 (the degree-(-2) normalization all maps
// here satisfy), with a message saying which reading failed.
inline SplittingType splitting_type(const HilbertProfile& p) {
    const auto& d = p.dims;
    const int lo = p.lo;
    if (d.empty()) throw std::invalid_argument("empty profile");
    if (std::all_of(d.begin(), d.end(), [](int x) { return x == 0; }))
        throw std::domain_error(
            "kernel has no elements in the window; widen the window or the map is degenerate");
    if (d.size() < 2) throw std::domain_error("window too short to read the growth rate");
    const int hi = p.hi();
    if (d[d.size() - 1] - d[d.size() - 2] != 2)
        throw std::domain_error("growth at the window top is " +
                                std::to_string(d[d.size() - 1] - d[d.size() - 2]) +
                                " per degree, not the 2 of a rank-2 kernel; widen the window");
    const int degree_sum = 2 * hi + 2 - d[d.size() - 1];  // w1 + w2
    if (degree_sum != 2)
        throw std::domain_error("generator degrees sum to " + std::to_string(degree_sum) +
                                ", not the 2 of a degree-(-2) rank-2 kernel");

    int w1 = 0, w2 = 0;
    if (d[0] > 0) {
        if (lo > 0)
            throw std::domain_error(
                "profile is already positive at the window start; widen the window downward");
        w1 = lo + 1 - d[0];
        w2 = degree_sum - w1;
    } else {
        std::size_t idx = 0;
        while (d[idx] == 0) ++idx;
        const int lstar = lo + static_cast<int>(idx);
        if (d[idx] == 1) {
            w1 = lstar;
            w2 = degree_sum - lstar;
        } else if (d[idx] == 2) {
            w1 = w2 = lstar;
        } else {
            throw std::domain_error("dimension jumps by " + std::to_string(d[idx]) +
                                    " at degree " + std::to_string(lstar) +
                                    "; not free of rank 2");
        }
    }
    if (w1 > w2) std::swap(w1, w2);
    if (w1 + w2 != degree_sum)
        throw std::domain_error("generators at degree " + std::to_string(w1) +
                                " contradict the degree sum 2");
    for (int l = lo; l <= hi; ++l) {
        const int expect = std::max(0, l - w1 + 1) + std::max(0, l - w2 + 1);
        if (p.dim_at(l) != expect)
            throw std::domain_error(
                "profile does not match any rank-2 free module: at degree " + std::to_string(l) +
                " it is " + std::to_string(p.dim_at(l)) + ", expected " + std::to_string(expect));
    }
    return {-w1, -w2};
}

// Random coefficients for the given degree data.  Forms are drawn source by
// source, target by target, low coefficient first, so a fixed rng stream
// reproduces the spec exactly.
template <class F>
GradedMapSpec<F> random_spec(const F& field, SeededRng& rng, const std::vector<int>& src,
                             const std::vector<int>& tgt) {
    std::vector<std::vector<BinaryForm<F>>> forms;
    for (std::size_t j = 0; j < src.size(); ++j) {
        std::vector<BinaryForm<F>> row;
        for (std::size_t i = 0; i < tgt.size(); ++i) {
            const int deg = src[j] - tgt[i];
            std::vector<typename F::Scalar> coeffs;
            for (int c = 0; c <= deg; ++c) coeffs.push_back(field.random(rng));
            row.emplace_back(field, std::move(coeffs));
        }
        forms.push_back(std::move(row));
    }
    return GradedMapSpec<F>(field, src, tgt, std::move(forms));
}

template <class F>
struct GenericityWitness {
    GradedMapSpec<F> spec;
    HilbertProfile profile;
    int attempts = 0;
};

// Searches for an explicit coefficient choice whose Hilbert profile is the
// generic one on the default window.  Over a large prime field the first
// draw succeeds up to probability O(matrix size / p), so more than one
// attempt is already news.
template <class F>
GenericityWitness<F> genericity_witness(const F& field, const std::vector<int>& src,
                                        const std::vector<int>& tgt, int max_attempts,
                                        SeededRng& rng) {
    auto bad = GradedMapSpec<F>::degree_violations(src, tgt);
    if (!bad.empty()) throw std::invalid_argument(bad.front());
    if (max_attempts < 1) throw std::invalid_argument("need at least one attempt");
    auto [lo, hi] = default_window(src);
    const HilbertProfile want = generic_profile(lo, hi);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        GradedMapSpec<F> spec = random_spec(field, rng, src, tgt);
        HilbertProfile got = hilbert_profile(spec, lo, hi);
        if (got == want) return {std::move(spec), std::move(got), attempt};
    }
    throw std::runtime_error("no genericity witness in " + std::to_string(max_attempts) +
                             " attempts; degree data may be degenerate");
}

// Degree data sampler for randomized runs of the kernel genericity check.
// Stays in the regime the geometric maps occupy: source degrees in [-3, 0]
// (sections restricted to a curve have small nonnegative degrees, negated
// here), targets pushed low enough that every d_ji is nonnegative, and all
// form degrees capped at 6.
inline std::pair<std::vector<int>, std::vector<int>> sample_lemma_degrees(SeededRng& rng,
                                                                          int max_m = 4) {
    if (max_m < 1) throw std::invalid_argument("max_m must be at least 1");
    for (int tries = 0; tries < 1000; ++tries) {
        const int m = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_m)));
        std::vector<int> src;
        int s_min = 0, s_sum = 0;
        for (int j = 0; j < m + 2; ++j) {
            const int e = static_cast<int>(rng.between(-3, 0));
            src.push_back(e);
            s_min = std::min(s_min, e);
            s_sum += e;
        }
        // targets are s_min - c_i with c_i >= 0 summing to the budget below;
        // capping c_i at 3 keeps every form degree at most 6
        const int budget = m * s_min - s_sum + 2;
        if (budget < 0 || budget > 3 * m) continue;
        std::vector<int> caps(static_cast<std::size_t>(m), 0);
        for (int u = 0; u < budget; ++u) {
            for (;;) {
                const auto i = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(m)));
                if (caps[i] < 3) {
                    ++caps[i];
                    break;
                }
            }
        }
        std::vector<int> tgt;
        for (int c : caps) tgt.push_back(s_min - c);
        return {std::move(src), std::move(tgt)};
    }
    throw std::logic_error("degree sampler failed to produce admissible data");
}

struct LemmaTrialFailure {
    long long index = 0;
    std::uint64_t seed = 0;
    std::vector<int> source_degrees;
    std::vector<int> target_degrees;
    HilbertProfile profile;
};

struct LemmaTrialStats {
    long long trials = 0;
    long long generic = 0;
    std::vector<LemmaTrialFailure> failures;
};

template <class F>
struct LemmaTrialRun {
    std::vector<int> source_degrees;
    std::vector<int> target_degrees;
    GradedMapSpec<F> spec;
    HilbertProfile profile;
    bool generic = false;
};

// One trial from one seed: sample degrees, draw coefficients, profile, and
// compare against the generic profile.  run_lemma_trials() derives trial i's
// seed from the master stream, so any failure replays from its logged seed.
template <class F>
LemmaTrialRun<F> replay_lemma_trial(const F& field, std::uint64_t seed, int max_m = 4) {
    SeededRng rng(seed);
    auto [src, tgt] = sample_lemma_degrees(rng, max_m);
    GradedMapSpec<F> spec = random_spec(field, rng, src, tgt);
    auto [lo, hi] = default_window(src);
    HilbertProfile prof = hilbert_profile(spec, lo, hi);
    const bool ok = prof == generic_profile(lo, hi);
    return {std::move(src), std::move(tgt), std::move(spec), std::move(prof), ok};
}

template <class F>
LemmaTrialStats run_lemma_trials(const F& field, std::uint64_t master_seed, long long trials,
                                 int max_m = 4) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    LemmaTrialStats stats;
    stats.trials = trials;
    for (long long i = 0; i < trials; ++i) {
        const std::uint64_t seed = SeededRng::derive_seed(master_seed, "lemma-trial",
                                                          static_cast<std::uint64_t>(i));
        LemmaTrialRun<F> run = replay_lemma_trial(field, seed, max_m);
        if (run.generic) {
            ++stats.generic;
        } else {
            stats.failures.push_back(
                {i, seed, run.source_degrees, run.target_degrees, run.profile});
        }
    }
    return stats;
}

}  // namespace conifold
