#include "allmatch/ensembles.hpp"

#include "allmatch/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace allmatch {

namespace {

void validate(const EnsembleSpec& spec) {
    if (spec.rows < 0 || spec.cols < 0)
        throw ValidationError("ensemble dimensions must be >= 0");
    if (spec.cols > ZeroOneMatrix::max_cols)
        throw CapabilityError("ensemble has " + std::to_string(spec.cols) +
                              " columns, limit is 64");
    if (spec.kind == EnsembleKind::Bernoulli && (spec.p < 0 || spec.p > 1))
        throw ValidationError("Bernoulli p must lie in [0,1], got " +
                              spec.p.get_str());
    if (spec.kind == EnsembleKind::FixedOnes &&
        (spec.ones < 0 || spec.ones > spec.cells()))
        throw ValidationError("FixedOnes requires 0 <= ones <= rows*cols, got " +
                              std::to_string(spec.ones));
}

ZeroOneMatrix from_cells(const EnsembleSpec& spec, const std::vector<char>& cell) {
    std::vector<std::uint64_t> bits(static_cast<std::size_t>(spec.rows), 0);
    for (int i = 0; i < spec.rows; ++i)
        for (int j = 0; j < spec.cols; ++j)
            if (cell[static_cast<std::size_t>(i) * spec.cols + j])
                bits[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    return make_matrix_from_bits(spec.rows, spec.cols, bits);
}

// Lexicographic position t of the flattened string is bit (cells-1-t) of the
// counter, so counter order is string order.
ZeroOneMatrix from_counter(const EnsembleSpec& spec, std::uint64_t counter) {
    const long cells = spec.cells();
    std::vector<char> cell(static_cast<std::size_t>(cells));
    for (long t = 0; t < cells; ++t)
        cell[static_cast<std::size_t>(t)] =
            static_cast<char>((counter >> (cells - 1 - t)) & 1u);
    return from_cells(spec, cell);
}

} // namespace

EnsembleSpec EnsembleSpec::bernoulli(int rows, int cols, ExactRational p) {
    EnsembleSpec s;
    s.kind = EnsembleKind::Bernoulli;
    s.rows = rows;
    s.cols = cols;
    s.p = std::move(p);
    validate(s);
    return s;
}

EnsembleSpec EnsembleSpec::fixed_ones(int rows, int cols, long ones) {
    EnsembleSpec s;
    s.kind = EnsembleKind::FixedOnes;
    s.rows = rows;
    s.cols = cols;
    s.ones = ones;
    validate(s);
    return s;
}

EnsembleSpec EnsembleSpec::exhaustive(int rows, int cols) {
    EnsembleSpec s;
    s.kind = EnsembleKind::Exhaustive;
    s.rows = rows;
    s.cols = cols;
    validate(s);
    return s;
}

nlohmann::json ensemble_to_json(const EnsembleSpec& spec) {
    nlohmann::json j;
    j["rows"] = spec.rows;
    j["cols"] = spec.cols;
    switch (spec.kind) {
        case EnsembleKind::Bernoulli:
            j["kind"] = "bernoulli";
            j["p"] = spec.p.get_str();
            break;
        case EnsembleKind::FixedOnes:
            j["kind"] = "fixed_ones";
            j["ones"] = spec.ones;
            break;
        case EnsembleKind::Exhaustive:
            j["kind"] = "exhaustive";
            break;
    }
    return j;
}

EnsembleSpec ensemble_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("rows") || !j.contains("cols"))
        throw ValidationError("ensemble JSON must have kind, rows, cols");
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
        throw ValidationError("ensemble rows/cols must be integers");
    const int rows = j["rows"].get<int>();
    const int cols = j["cols"].get<int>();
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "bernoulli") {
        if (!j.contains("p")) throw ValidationError("bernoulli ensemble needs p");
        ExactRational p;
        if (j["p"].is_string()) {
            if (mpq_set_str(p.get_mpq_t(), j["p"].get<std::string>().c_str(), 10) != 0)
                throw ValidationError("invalid rational p: " + j["p"].get<std::string>());
            if (mpz_sgn(mpq_denref(p.get_mpq_t())) == 0)
                throw ValidationError("p has zero denominator");
            p.canonicalize();
        } else if (j["p"].is_number_integer()) {
            p = ExactRational(j["p"].get<long>());
        } else {
            throw ValidationError("write p as a string like \"1/2\" to keep it exact");
        }
        return EnsembleSpec::bernoulli(rows, cols, p);
    }
    if (kind == "fixed_ones") {
        if (!j.contains("ones") || !j["ones"].is_number_integer())
            throw ValidationError("fixed_ones ensemble needs integer ones");
        return EnsembleSpec::fixed_ones(rows, cols, j["ones"].get<long>());
    }
    if (kind == "exhaustive") return EnsembleSpec::exhaustive(rows, cols);
    throw ValidationError("unknown ensemble kind '" + kind + "'");
}

ZeroOneMatrix sample(const EnsembleSpec& spec, SplitMix64& rng) {
    validate(spec);
    const long cells = spec.cells();
    switch (spec.kind) {
        case EnsembleKind::Bernoulli: {
            const ExactCount num(spec.p.get_num());
            const ExactCount den(spec.p.get_den());
            if (!den.fits_ulong_p())
                throw CapabilityError("Bernoulli p denominator too large to sample exactly");
            const std::uint64_t d = den.get_ui();
            const std::uint64_t u = num.get_ui(); // num <= den once p <= 1
            std::vector<std::uint64_t> bits(static_cast<std::size_t>(spec.rows), 0);
            for (int i = 0; i < spec.rows; ++i)
                for (int j = 0; j < spec.cols; ++j)
                    if (rng.next_below(d) < u)
                        bits[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
            return make_matrix_from_bits(spec.rows, spec.cols, bits);
        }
        case EnsembleKind::FixedOnes: {
            // Partial Fisher-Yates: the first `ones` entries of a shuffled
            // cell-index list are a uniform subset.
            std::vector<long> idx(static_cast<std::size_t>(cells));
            std::iota(idx.begin(), idx.end(), 0);
            std::vector<char> cell(static_cast<std::size_t>(cells), 0);
            for (long i = 0; i < spec.ones; ++i) {
                const long j = i + static_cast<long>(rng.next_below(
                    static_cast<std::uint64_t>(cells - i)));
                std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
                cell[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] = 1;
            }
            return from_cells(spec, cell);
        }
        case EnsembleKind::Exhaustive:
            throw ValidationError("cannot sample the exhaustive kind; use enumeration");
    }
    throw ValidationError("unreachable ensemble kind");
}

EnsembleEnumerator::EnsembleEnumerator(const EnsembleSpec& spec, long cap)
    : spec_(spec) {
    validate(spec);
    const long cells = spec.cells();
    if (spec.kind == EnsembleKind::FixedOnes) {
        total_ = binomial(static_cast<unsigned long>(cells),
                          static_cast<unsigned long>(spec.ones));
        pattern_.assign(static_cast<std::size_t>(cells), 0);
        std::fill(pattern_.end() - spec.ones, pattern_.end(), 1);
    } else {
        total_ = pow2(static_cast<unsigned long>(cells));
    }
    if (total_ > ExactCount(cap))
        throw CapabilityError("enumeration would yield " + total_.get_str() +
                              " matrices, cap is " + std::to_string(cap));
}

std::optional<ZeroOneMatrix> EnsembleEnumerator::next() {
    if (emitted_ >= total_) return std::nullopt;
    emitted_ += 1;
    if (spec_.kind == EnsembleKind::FixedOnes) {
        if (pattern_done_) return std::nullopt;
        ZeroOneMatrix m = from_cells(spec_, pattern_);
        pattern_done_ = !std::next_permutation(pattern_.begin(), pattern_.end());
        return m;
    }
    return from_counter(spec_, counter_++);
}

ExactRational exhaustive_expectation(const EnsembleSpec& spec, const StatFn& f,
                                     long cap) {
    EnsembleEnumerator en(spec, cap);
    const long cells = spec.cells();
    ExactRational acc = 0;
    if (spec.kind == EnsembleKind::Bernoulli && spec.p != ExactRational(1, 2)) {
        const ExactRational q = 1 - spec.p;
        while (auto m = en.next()) {
            const long ones = m->ones();
            ExactRational weight = 1;
            for (long t = 0; t < ones; ++t) weight *= spec.p;
            for (long t = ones; t < cells; ++t) weight *= q;
            acc += weight * f(*m);
        }
        return acc;
    }
    while (auto m = en.next()) acc += f(*m);
    return acc / ExactRational(en.total());
}

SampledExpectation sampled_expectation(const EnsembleSpec& spec, const StatFn& f,
                                       std::uint64_t n_samples, std::uint64_t seed) {
    if (n_samples == 0) throw ValidationError("sampled_expectation requires n_samples >= 1");
    ExactRational sum = 0, sum_sq = 0;
    for (std::uint64_t i = 0; i < n_samples; ++i) {
        SplitMix64 rng = substream(seed, i);
        const ExactRational v = f(sample(spec, rng));
        sum += v;
        sum_sq += v * v;
    }
    SampledExpectation out;
    const ExactRational n(static_cast<unsigned long>(n_samples));
    out.mean = sum / n;
    out.n_samples = n_samples;
    if (n_samples >= 2) {
        const ExactRational s2 = (sum_sq - sum * sum / n) / (n - 1);
        const double v = to_double(s2 / n);
        out.std_error = v > 0 ? std::sqrt(v) : 0.0;
    } else {
        out.std_error = 0.0;
    }
    return out;
}

} // namespace allmatch
