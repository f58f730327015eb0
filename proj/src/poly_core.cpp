#include "fibroot/poly_core.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace fibroot {

namespace {

mpfr_prec_t eval_prec(const Ball& z, const PrecisionConfig& prec) {
    return std::max<mpfr_prec_t>(z.prec(),
                                 static_cast<mpfr_prec_t>(prec.working_bits));
}

// Determinant of an exact integer matrix by fraction-free Bareiss
// elimination with row pivoting (sign tracked).
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const size_t n = m.size();
    int sign = 1;
    BigInt prev = 1;
    for (size_t r = 0; r + 1 < n; ++r) {
        size_t piv = r;
        while (piv < n && m[piv][r] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != r) {
            std::swap(m[piv], m[r]);
            sign = -sign;
        }
        for (size_t i = r + 1; i < n; ++i) {
            for (size_t j = r + 1; j < n; ++j) {
                BigInt num = m[r][r] * m[i][j] - m[i][r] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(),
                             prev.get_mpz_t());
            }
            m[i][r] = 0;
        }
        prev = m[r][r];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

Ball eval_g(FamilyIndex k, const Ball& z, const PrecisionConfig& prec) {
    Ball zz = bl_promote(z, eval_prec(z, prec));
    Ball zk = bl_pow_ui(zz, static_cast<unsigned long>(k.k));
    Ball r = bl_add_si(bl_mul(zk, bl_add_si(zz, -2)), 1);
    r.validate();
    return r;
}

Ball eval_g_prime(FamilyIndex k, const Ball& z, const PrecisionConfig& prec) {
    Ball zz = bl_promote(z, eval_prec(z, prec));
    Ball zk1 = bl_pow_ui(zz, static_cast<unsigned long>(k.k - 1));
    Ball lin = bl_add_si(bl_mul_si(zz, k.k + 1), -2L * k.k);
    Ball r = bl_mul(zk1, lin);
    r.validate();
    return r;
}

Ball eval_h_prime(FamilyIndex k, const Ball& y, const PrecisionConfig& prec) {
    Ball yy = bl_promote(y, eval_prec(y, prec));
    Ball yk = bl_pow_ui(yy, static_cast<unsigned long>(k.k));
    Ball r = bl_add_si(bl_mul_si(yk, k.k + 1), -2);
    r.validate();
    return r;
}

BigInt discriminant_closed_form(FamilyIndex k) {
    const auto ku = static_cast<unsigned long>(k.k);
    BigInt d = bigint_pow(2, ku + 1) * bigint_pow(ku, ku) -
               bigint_pow(ku + 1, ku + 1);
    if (d <= 0)
        throw std::runtime_error(
            "discriminant closed form unexpectedly nonpositive at k=" +
            std::to_string(k.k));
    return d;
}

BigInt discriminant_resultant_oracle(FamilyIndex k, int cap) {
    if (k.k > cap)
        throw std::invalid_argument(
            "resultant oracle refused: k=" + std::to_string(k.k) +
            " exceeds cap " + std::to_string(cap) +
            " (Sylvester determinant cost grows quickly)");
    // g has degree n = k+1 with coefficients [1, -2, 0, ..., 0, 1];
    // g' has degree m = k with coefficients [k+1, -2k, 0, ..., 0].
    const int n = k.k + 1;
    const int m = k.k;
    const size_t dim = static_cast<size_t>(n + m);
    std::vector<std::vector<BigInt>> s(dim, std::vector<BigInt>(dim, BigInt(0)));
    for (int row = 0; row < m; ++row) {
        s[row][row] = 1;
        s[row][row + 1] = -2;
        s[row][row + n] = 1;
    }
    for (int row = 0; row < n; ++row) {
        s[m + row][row] = k.k + 1;
        s[m + row][row + 1] = -2L * k.k;
    }
    // |disc(g)| = |Res(g, g')| since g is monic.
    return abs(bareiss_determinant(std::move(s)));
}

BigInt disc_f_from_disc_g(FamilyIndex k) {
    BigInt d = discriminant_closed_form(k);
    BigInt q = BigInt(k.k - 1) * BigInt(k.k - 1);
    if (!mpz_divisible_p(d.get_mpz_t(), q.get_mpz_t()))
        throw std::runtime_error(
            "(k-1)^2 does not divide the discriminant at k=" +
            std::to_string(k.k) + ": identity falsified");
    BigInt r;
    mpz_divexact(r.get_mpz_t(), d.get_mpz_t(), q.get_mpz_t());
    return r;
}

}  // namespace fibroot
