#include "jg/spectrum.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace jg {

BigInt Spectrum::vertex_count() const {
    return binom(params.n, params.r);
}

std::vector<std::pair<BigInt, BigInt>> Spectrum::merged() const {
    std::map<BigInt, BigInt> sums;
    for (const auto& e : entries) sums[e.value] += e.multiplicity;
    std::vector<std::pair<BigInt, BigInt>> out(sums.rbegin(), sums.rend());
    return out;
}

BigInt degree(const GraphParams& p) {
    GraphParams::checked(p.n, p.r, p.s);
    // C(n-r, r-s) vanishes exactly when 2r - s > n, so degenerate
    // parameters get degree 0 without a special case.
    return binom(p.r, p.s) * binom(p.n - p.r, p.r - p.s);
}

namespace {

void require_canonical_index(const GraphParams& p, long i, const char* who) {
    GraphParams::checked(p.n, p.r, p.s);
    if (!p.canonical())
        throw std::invalid_argument(std::string(who) + ": G" + p.str() +
                                    " needs r <= n/2; canonicalize first");
    if (i < 0 || i > p.r)
        throw std::out_of_range(std::string(who) + ": index " +
                                std::to_string(i) + " outside 0.." +
                                std::to_string(p.r));
}

}  // namespace

BigInt eigenvalue_route_a(const GraphParams& p, long i) {
    require_canonical_index(p, i, "eigenvalue_route_a");
    const long n = p.n, r = p.r, k = p.k();
    BigInt sum = 0;
    for (long j = 0; j <= k; ++j) {
        BigInt term = binom(r - j, k - j) * binom(r - i, j) *
                      binom(n - r + j - i, j);
        if ((k - j) % 2 != 0) term = -term;
        sum += term;
    }
    return sum;
}

BigInt eigenvalue_route_b(const GraphParams& p, long i) {
    require_canonical_index(p, i, "eigenvalue_route_b");
    const long n = p.n, r = p.r, k = p.k();
    BigInt sum = 0;
    for (long j = 0; j <= std::min(i, k); ++j) {
        BigInt term = binom(i, j) * binom(r - i, k - j) *
                      binom(n - r - i, k - j);
        if (j % 2 != 0) term = -term;
        sum += term;
    }
    return sum;
}

Spectrum full_spectrum(const GraphParams& given) {
    GraphParams::checked(given.n, given.r, given.s);
    if (given.degenerate())
        throw std::domain_error(
            "G" + given.str() +
            " is edgeless (2r - s > n): every pair of r-sets meets in more "
            "than s elements");
    const GraphParams p = canonicalize(given);

    Spectrum sp;
    sp.params = p;
    const auto& row = binom_row(p.n);
    sp.entries.reserve(static_cast<std::size_t>(p.r) + 1);
    for (long i = 0; i <= p.r; ++i) {
        BigInt mult = row[static_cast<std::size_t>(i)];
        if (i > 0) mult -= row[static_cast<std::size_t>(i - 1)];
        sp.entries.push_back({i, eigenvalue_route_b(p, i), std::move(mult)});
    }
    sp.degree = degree(p);
    if (sp.entries[0].value != sp.degree)
        throw std::logic_error("E(0) disagrees with the degree for G" +
                               p.str());

    sp.lambda = 0;
    sp.argmax_index = 1;
    for (long i = 1; i <= p.r; ++i) {
        BigInt a = abs(sp.entries[static_cast<std::size_t>(i)].value);
        if (a > sp.lambda) {
            sp.lambda = std::move(a);
            sp.argmax_index = i;
        }
    }
    return sp;
}

BigInt eberlein_term(const GraphParams& p, long i, long j) {
    GraphParams::checked(p.n, p.r, p.s);
    if (i < 0 || i > p.r || i > p.n - p.r)
        throw std::domain_error("eberlein_term: index " + std::to_string(i) +
                                " outside 0..min(r, n-r) for G" + p.str());
    const long k = p.k();
    return binom(i, j) * binom(p.r - i, k - j) * binom(p.n - p.r - i, k - j);
}

BigRat eberlein_recurrence_residual(const GraphParams& p, long i, long j) {
    GraphParams::checked(p.n, p.r, p.s);
    const long n = p.n, r = p.r, s = p.s;
    if (i < 1 || i > r)
        throw std::domain_error("recurrence residual: need 1 <= i <= r");
    if (j < 0 || j > i)
        throw std::domain_error("recurrence residual: need 0 <= j <= i");
    if (n - r - i + 1 <= 0)
        throw std::domain_error(
            "recurrence residual: denominator (n-r-i+1) not positive");

    const BigInt den = BigInt(r - i + 1) * (n - r - i + 1);
    const BigInt coeff_diag = BigInt(r - s - j + 1) * (r - s - j + 1);
    const BigInt coeff_same =
        BigInt(s - i + j + 1) * (n - 2 * r + s + j - i + 1);

    const BigRat lhs(eberlein_term(p, i, j));
    const BigRat rhs = make_rat(coeff_diag * eberlein_term(p, i - 1, j - 1) +
                                    coeff_same * eberlein_term(p, i - 1, j),
                                den);
    return lhs - rhs;
}

std::string theorem_name(Theorem t) {
    switch (t) {
        case Theorem::lovasz: return "lovasz";
        case Theorem::brouwer: return "brouwer";
        case Theorem::t4: return "t4";
        case Theorem::t5_1: return "t5.1";
        case Theorem::main_bound: return "main";
    }
    return "?";
}

std::optional<Theorem> theorem_from_name(const std::string& name) {
    if (name == "lovasz") return Theorem::lovasz;
    if (name == "brouwer") return Theorem::brouwer;
    if (name == "t4") return Theorem::t4;
    if (name == "t5.1" || name == "t5_1" || name == "t5") return Theorem::t5_1;
    if (name == "main") return Theorem::main_bound;
    return std::nullopt;
}

BoundReport verify_bound(const GraphParams& given, Theorem t,
                         std::optional<BigRat> alpha) {
    GraphParams::checked(given.n, given.r, given.s);
    BoundReport rep;
    rep.theorem = t;
    rep.params = given;
    if (t == Theorem::main_bound) {
        if (!alpha)
            throw std::invalid_argument("verify_bound: main needs alpha");
        rep.alpha = *alpha;
    }
    if (given.degenerate()) {
        rep.canon = given;
        rep.degenerate = true;
        rep.lambda = 0;
        return rep;
    }
    rep.canon = canonicalize(given);
    const Spectrum sp = full_spectrum(rep.canon);
    rep.lambda = sp.lambda;
    rep.argmax_index = sp.argmax_index;
    const long n = rep.canon.n, r = rep.canon.r, s = rep.canon.s;
    const BigInt& d = sp.degree;

    auto finish_ratio = [&rep]() {
        if (rep.predicted && *rep.predicted != 0)
            rep.ratio = BigRat(BigRat(rep.lambda) / *rep.predicted);
    };

    switch (t) {
        case Theorem::lovasz: {
            rep.applicable = (s == 0);
            if (!rep.applicable) break;
            rep.predicted = make_rat(BigInt(r) * d, BigInt(n - r));
            finish_ratio();
            rep.claim_holds = (BigRat(rep.lambda) == *rep.predicted);
            break;
        }
        case Theorem::brouwer: {
            rep.applicable =
                BigInt(r - s) * (n - 1) >= BigInt(r) * (n - r);
            if (!rep.applicable) break;
            rep.predicted = make_rat(abs(BigInt(s) * n - BigInt(r) * r) * d,
                                     BigInt(r) * (n - r));
            finish_ratio();
            rep.claim_holds = (BigRat(rep.lambda) == *rep.predicted &&
                               rep.argmax_index == 1);
            break;
        }
        case Theorem::t4: {
            rep.applicable = (s >= 1 && r == 2 * s && n == 4 * s);
            if (!rep.applicable) break;
            BigInt half = binom(2 * s - 2, s - 1);
            rep.predicted =
                make_rat(BigInt(4 * s - 2) * half * half, BigInt(s) * s);
            finish_ratio();
            rep.claim_holds =
                (rep.lambda == abs(sp.entries[2].value));
            break;
        }
        case Theorem::t5_1: {
            rep.applicable = (s >= 1);
            if (!rep.applicable) break;
            rep.predicted = make_rat(BigInt(s) * d, BigInt(r));
            finish_ratio();
            rep.claim_holds = (rep.argmax_index == 1);
            break;
        }
        case Theorem::main_bound: {
            rep.applicable = true;
            const BigRat a = *alpha;
            const BigRat fr = BigRat(r) - a * n;
            const BigRat fs = BigRat(s) - a * a * n;
            rep.f_r = fr;
            rep.f_s = fs;
            BigRat m(1);
            const BigRat cross = abs(fs - BigRat(2) * a * fr);
            if (cross > m) m = cross;
            const BigRat quad = fr * fr / BigRat(n);
            if (quad > m) m = quad;
            rep.predicted = BigRat(BigRat(d) * m / BigRat(n));
            finish_ratio();
            break;
        }
    }
    return rep;
}

ScanResult scan_bounds(const std::vector<ScanItem>& items, Theorem t) {
    ScanResult out;
    out.reports.reserve(items.size());
    for (const auto& item : items) {
        try {
            out.reports.push_back(verify_bound(item.params, t, item.alpha));
        } catch (const std::exception& e) {
            BoundReport rep;
            rep.theorem = t;
            rep.params = item.params;
            rep.canon = item.params;
            rep.alpha = item.alpha;
            rep.error = e.what();
            out.reports.push_back(std::move(rep));
            out.any_error = true;
        }
    }
    for (std::size_t idx = 0; idx < out.reports.size(); ++idx) {
        const auto& rep = out.reports[idx];
        if (rep.ratio && (!out.max_ratio || *rep.ratio > *out.max_ratio)) {
            out.max_ratio = rep.ratio;
            out.max_ratio_index = static_cast<long>(idx);
        }
    }
    // Least position whose whole suffix satisfies the pointwise claim.
    long last_bad = -1;
    for (std::size_t idx = 0; idx < out.reports.size(); ++idx) {
        const auto& c = out.reports[idx].claim_holds;
        if (!c || !*c) last_bad = static_cast<long>(idx);
    }
    if (!out.reports.empty() &&
        last_bad + 1 <= static_cast<long>(out.reports.size()) - 1)
        out.threshold_index = last_bad + 1;
    return out;
}

}  // namespace jg
