#include "kneserlab/closedform.hpp"

#include <algorithm>

#include "kneserlab/exactcount.hpp"
#include "kneserlab/splits.hpp"

namespace kneserlab {

BigCount exact_coverage(int n, int r, int ell, int required, int excluded) {
    if (required < 0 || excluded < 0 || ell < 1) throw error("exact_coverage: bad parameters");
    BigCount total = 0;
    for (int i = 0; i <= excluded; ++i) {
        BigCount term = binomial(excluded, i) *
                        binomial(n - static_cast<long long>(ell) * (required + i),
                                 r - static_cast<long long>(ell) * (required + i));
        if (i % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

CoverageCount coverage_counts(int n, int r, int ell, int c) {
    if (c < 2) throw error("coverage_counts: c >= 2 required");
    if (ell < 1 || ell >= r) throw error("coverage_counts: requires 1 <= ell < r");
    if (n < c * ell) throw error("coverage_counts: n >= c*ell required");
    CoverageCount out;
    out.n = n;
    out.r = r;
    out.ell = ell;
    out.c = c;

    auto alternating = [&](int base, int slots) {
        // sum_{i=0}^{slots} (-1)^i binom(n - ell(base+i), r - ell(base+i)) binom(slots, i)
        BigCount total = 0;
        for (int i = 0; i <= slots; ++i) {
            BigCount term = binomial(n - static_cast<long long>(ell) * (base + i),
                                     r - static_cast<long long>(ell) * (base + i)) *
                            binomial(slots, i);
            if (i % 2 == 0)
                total += term;
            else
                total -= term;
        }
        return total;
    };
    auto checked = [&](BigCount display, int required, int excluded, const char* name) {
        if (display != exact_coverage(n, r, ell, required, excluded))
            throw error(std::string("coverage_counts: display disagrees with the generic "
                                    "signed sum for ") +
                        name);
        return display;
    };

    for (int x = 0; x <= c - 2; ++x)
        out.a.push_back(checked(alternating(x + 2, c - 2 - x), x + 2, c - 2 - x, "A"));
    for (int y = 0; y <= c - 1; ++y)
        out.b.push_back(checked(alternating(y + 1, c - 1 - y), y + 1, c - 1 - y, "B"));
    for (int z = 0; z <= c; ++z)
        out.cc.push_back(checked(alternating(z, c - z), z, c - z, "C"));
    for (int x = 0; x <= c - 2; ++x)
        out.d.push_back(checked(alternating(x + 1, c - 2 - x), x + 1, c - 2 - x, "D"));
    for (int z = 0; z <= c - 1; ++z)
        out.e.push_back(checked(alternating(z, c - 1 - z), z, c - 1 - z, "E"));
    return out;
}

namespace {

void check_alpha_params(const AlphaParameters& p) {
    if (p.k < 4) throw error("alpha: k >= 4 required (smaller k has its own exact values)");
    if (p.ell < 1 || p.ell >= p.r) throw error("alpha: requires 1 <= ell < r");
    if (p.n < p.r) throw error("alpha: n >= r required");
}

}  // namespace

BigCount alpha(const AlphaParameters& p) {
    check_alpha_params(p);
    CND f = cnd(p.k);
    if (p.k == 4 || p.r < 2 * p.ell)
        return f.n * big_pow(f.d, binomial(p.n - p.ell, p.r - p.ell));

    const int c = f.c;
    const int q = p.r / p.ell;
    if (p.n < c * p.ell) throw error("alpha: n >= c(k)*ell required");
    CoverageCount cov = coverage_counts(p.n, p.r, p.ell, c);
    BigCount result = f.n;
    switch (p.k % 3) {
        case 0: {
            const int xs = c;  // every slot carries three colors
            for (int z = 1; z <= std::min(xs, q); ++z)
                result *= big_pow(3 * z, cov.cc[static_cast<std::size_t>(z)] * binomial(xs, z));
            break;
        }
        case 1: {
            const int xs = c - 2;
            for (int x = 0; x <= std::min(xs, q - 2); ++x)
                result *= big_pow(4 + 3 * x, cov.a[static_cast<std::size_t>(x)] * binomial(xs, x));
            for (int y = 0; y <= std::min(xs, q - 1); ++y)
                result *=
                    big_pow(2 + 3 * y, 2 * cov.b[static_cast<std::size_t>(y)] * binomial(xs, y));
            for (int z = 1; z <= std::min(xs, q); ++z)
                result *= big_pow(3 * z, cov.cc[static_cast<std::size_t>(z)] * binomial(xs, z));
            break;
        }
        case 2: {
            const int xs = c - 1;
            for (int y = 0; y <= std::min(xs, q - 1); ++y)
                result *= big_pow(2 + 3 * y, cov.b[static_cast<std::size_t>(y)] * binomial(xs, y));
            for (int z = 1; z <= std::min(xs, q); ++z)
                result *= big_pow(3 * z, cov.cc[static_cast<std::size_t>(z)] * binomial(xs, z));
            break;
        }
    }
    return result;
}

BigCount alpha_expanded(const AlphaParameters& p) {
    check_alpha_params(p);
    CND f = cnd(p.k);
    if (p.k == 4 || p.r < 2 * p.ell)
        return f.n * big_pow(f.d, binomial(p.n - p.ell, p.r - p.ell));

    const int c = f.c;
    const int q = p.r / p.ell;
    CoverageCount cov = coverage_counts(p.n, p.r, p.ell, c);
    BigCount result = f.n;
    // One factor per index subset of the 3-carrying slots.
    auto expand = [&](int xs, int size, const BigCount& exponent, int base) {
        BigCount factor = big_pow(base, exponent);
        for (std::size_t i = 0; i < all_r_subsets(xs, size).size(); ++i) result *= factor;
    };
    switch (p.k % 3) {
        case 0:
            for (int z = 1; z <= std::min(c, q); ++z)
                expand(c, z, cov.cc[static_cast<std::size_t>(z)], 3 * z);
            break;
        case 1: {
            const int xs = c - 2;
            for (int x = 0; x <= std::min(xs, q - 2); ++x)
                expand(xs, x, cov.a[static_cast<std::size_t>(x)], 4 + 3 * x);
            for (int y = 0; y <= std::min(xs, q - 1); ++y)
                expand(xs, y, 2 * cov.b[static_cast<std::size_t>(y)], 2 + 3 * y);
            for (int z = 1; z <= std::min(xs, q); ++z)
                expand(xs, z, cov.cc[static_cast<std::size_t>(z)], 3 * z);
            break;
        }
        case 2: {
            const int xs = c - 1;
            for (int y = 0; y <= std::min(xs, q - 1); ++y)
                expand(xs, y, cov.b[static_cast<std::size_t>(y)], 2 + 3 * y);
            for (int z = 1; z <= std::min(xs, q); ++z)
                expand(xs, z, cov.cc[static_cast<std::size_t>(z)], 3 * z);
            break;
        }
    }
    return result;
}

namespace {

BigCount star_sum_from_patterns(const std::map<std::uint32_t, BigCount>& patterns, int c, int k) {
    BigCount total = 0;
    for (const auto& s : optimal_splits_for_slots(k, c)) {
        BigCount product = multinomial(k, s);
        for (const auto& [pat, count] : patterns) {
            long long weight = 0;
            for (int i = 0; i < c; ++i)
                if ((pat >> i) & 1) weight += s[static_cast<std::size_t>(i)];
            product *= big_pow(weight, count);
            if (product == 0) break;
        }
        total += product;
    }
    return total;
}

}  // namespace

BigCount star_sum(const Hypergraph& h, const CoverConfig& cover, int k, int ell) {
    if (ell != cover.ell()) throw error("star_sum: cover ell mismatch");
    return star_sum_from_patterns(coverage_patterns(h, cover), cover.size(), k);
}

BigCount star_sum_complete(int n, int r, const CoverConfig& cover, int k, int ell) {
    if (ell != cover.ell()) throw error("star_sum_complete: cover ell mismatch");
    if (ell >= r) throw error("star_sum_complete: requires ell < r");
    return star_sum_from_patterns(coverage_patterns_complete(n, r, cover), cover.size(), k);
}

BigCount star_block_product_complete(int n, int r, const CoverConfig& cover,
                                     const std::vector<int>& slot_sizes) {
    if (static_cast<int>(slot_sizes.size()) != cover.size())
        throw error("star_block_product_complete: one size per cover element required");
    BigCount product = 1;
    for (const auto& [pat, count] : coverage_patterns_complete(n, r, cover)) {
        long long weight = 0;
        for (int i = 0; i < cover.size(); ++i)
            if ((pat >> i) & 1) weight += slot_sizes[static_cast<std::size_t>(i)];
        product *= big_pow(weight, count);
        if (product == 0) break;
    }
    return product;
}

BigCount generalized_star_count(int n, int r, int ell, int y) {
    if (y < 0 || y > ell - 1) throw error("generalized_star_count: requires 0 <= y <= ell-1");
    if (ell < 1 || ell >= r) throw error("generalized_star_count: requires 1 <= ell < r");
    BigCount big_b = binomial(n - ell, r - ell);
    BigCount b2 = binomial(n - 2 * ell + y, r - 2 * ell + y);
    BigCount b1 = big_b - b2;
    return 6 * big_pow(4, big_b) +
           8 * (big_pow(3, b1) - 3 * big_pow(2, b1) + 3) * big_pow(4, b2);
}

BigCount t1_upper_bound(int n, int r, int k, int ell) {
    if (k < 4) throw error("t1_upper_bound: k >= 4 required");
    if (ell < 1 || ell >= r) throw error("t1_upper_bound: requires 1 <= ell < r");
    CND f = cnd(k);
    BigCount middle_exp =
        binomial(static_cast<long long>(ell) * f.c, ell + 1) * binomial(n - ell - 1, r - ell - 1);
    return f.n * big_pow(k, middle_exp) * big_pow(f.d, binomial(n - ell, r - ell));
}

Rational appendix_ratio(int n, int r, int ell, int k) {
    if (k % 3 != 1 || k < 7)
        throw error("appendix_ratio: requires k = 1 mod 3 with k >= 7");
    if (ell < 1 || ell >= r) throw error("appendix_ratio: requires 1 <= ell < r");
    if (r < 2 * ell - 1) throw error("appendix_ratio: requires r >= 2*ell - 1 (disjoint covers)");
    const int c = (k + 2) / 3;
    if (n < c * ell) throw error("appendix_ratio: n >= c(k)*ell required");
    const int q = r / ell;
    CoverageCount cov = coverage_counts(n, r, ell, c);

    BigCount num = 1, den = 1;
    for (int y = 1; y <= std::min(c - 2, q - 1); ++y)
        num *= big_pow(2 + 3 * y, 2 * cov.b[static_cast<std::size_t>(y)] * binomial(c - 2, y));
    for (int x = 1; x <= std::min(c - 2, q - 2); ++x)
        num *= big_pow(4 + 3 * x, cov.a[static_cast<std::size_t>(x)] * binomial(c - 2, x));
    for (int z = 1; z <= std::min(c - 2, q); ++z)
        den *= big_pow(3 * z, cov.b[static_cast<std::size_t>(z)] * binomial(c - 2, z));
    for (int x = 1; x <= std::min(c - 2, q - 1); ++x)
        den *= big_pow(4 + 3 * x, cov.d[static_cast<std::size_t>(x)] * binomial(c - 2, x));
    return Rational(num, den);
}

ProductInequalityResult product_inequality_check(const std::vector<int>& a,
                                                 const std::vector<int>& b, int m, int M,
                                                 const std::vector<int>& phi) {
    ProductInequalityResult out;
    const int p = static_cast<int>(a.size());
    const int q = static_cast<int>(b.size());
    auto fail = [&](const std::string& why) {
        out.hypotheses_ok = false;
        out.violation = why;
        return out;
    };
    if (m < 2 || m > 4) return fail("m must lie in {2,3,4}");
    if (q < std::max(p, 1)) return fail("q >= max(p,1) violated");
    for (int x : a)
        if (x < m + 2 || x > M) return fail("a_i outside [m+2, M]");
    for (int x : b)
        if (x < 2 || x > M) return fail("b_j outside [2, M]");
    if (static_cast<int>(phi.size()) != p) return fail("mapping must have one image per a_i");
    std::vector<bool> hit(static_cast<std::size_t>(q), false);
    for (int i = 0; i < p; ++i) {
        int j = phi[static_cast<std::size_t>(i)];
        if (j < 0 || j >= q) return fail("mapping image out of range");
        if (hit[static_cast<std::size_t>(j)]) return fail("mapping not injective");
        hit[static_cast<std::size_t>(j)] = true;
        if (a[static_cast<std::size_t>(i)] > b[static_cast<std::size_t>(j)] + m)
            return fail("a_i <= b_phi(i) + m violated");
    }
    out.hypotheses_ok = true;

    BigCount num = big_pow(m, BigCount(q - p));
    BigCount den = 1;
    for (int x : a) {
        num *= x;
        den *= (x - m);
    }
    for (int x : b) {
        num *= x;
        den *= (x + m);
    }
    out.lhs = Rational(num, den);

    bool strict_pair = false;
    for (int i = 0; i < p; ++i)
        if (a[static_cast<std::size_t>(i)] < b[static_cast<std::size_t>(phi[static_cast<std::size_t>(i)])] + m)
            strict_pair = true;
    // The 6/5 strengthening needs the >= 3 element to be m itself or an
    // unpaired b_j: an unpaired b contributes the factor m*b/(b+m) >= 6/5 as
    // soon as max(m, b) >= 3, while a paired b can sit arbitrarily close to
    // its partner (a = b + m gives factors near 1 for large b).
    bool surplus = false;
    if (p < q) {
        if (m >= 3) surplus = true;
        for (int j = 0; j < q && !surplus; ++j)
            if (!hit[static_cast<std::size_t>(j)] && b[static_cast<std::size_t>(j)] >= 3)
                surplus = true;
    }

    out.certified_bound = Rational(1);
    out.slack = InequalitySlack::Boundary;
    if (strict_pair) {
        Rational bound = Rational(1) + Rational(m, static_cast<long long>(M) * M - m * m);
        if (bound > out.certified_bound) {
            out.certified_bound = bound;
            out.slack = InequalitySlack::StrengthenedM;
        }
    }
    if (surplus) {
        Rational bound(6, 5);
        if (bound > out.certified_bound) {
            out.certified_bound = bound;
            out.slack = InequalitySlack::Strengthened65;
        }
    }
    out.holds = out.lhs >= out.certified_bound && out.lhs >= 1;
    return out;
}

Rational star_bracket_factor(int n, int r, int k, int ell, int c) {
    if (k < 2) throw error("star_bracket_factor: k >= 2 required");
    BigCount exponent = binomial(n - 2 * ell, r - ell);
    if (exponent > 100000)
        throw resource_error("star_bracket_factor: exponent too large for exact rationals");
    long long nsplits = static_cast<long long>(optimal_splits_for_slots(k, c).size());
    BigCount ak = 4 * binomial(nsplits + 1, 2) *
                  (factorial(k) * (factorial(k) - 1) / 2) * binomial(c, 2) * k;
    long long e = exponent.convert_to<long long>();
    Rational decay(big_pow(k - 1, BigCount(e)), big_pow(k, BigCount(e)));
    return Rational(1) - Rational(ak) * decay;
}

}  // namespace kneserlab
