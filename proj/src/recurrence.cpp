#include "fibroot/recurrence.hpp"

#include <stdexcept>

#include "fibroot/rootfinder.hpp"

namespace fibroot {

KFibState::KFibState(FamilyIndex k)
    : k_(k),
      window_(static_cast<size_t>(k.k), BigInt(0)),
      newest_(static_cast<size_t>(k.k) - 1),
      sum_(1),
      index_(1) {
    // Window holds F_{2-k}..F_1 = 0,...,0,1.
    window_[newest_] = 1;
}

void KFibState::advance() {
    // F_{n+1} is the sum of the current window; the window then slides by
    // replacing its oldest entry (F_{n+1-k}) with the new value.
    size_t oldest = (newest_ + 1) % window_.size();
    BigInt next = sum_;
    sum_ += next;
    sum_ -= window_[oldest];
    window_[oldest] = std::move(next);
    newest_ = oldest;
    ++index_;
}

BigInt kfib(FamilyIndex k, long n) {
    if (n < 2 - k.k)
        throw std::invalid_argument(
            "index below the defined range of the sequence");
    if (n < 1) return 0;
    KFibState st(k);
    while (st.index() < n) st.advance();
    return st.value();
}

Interval growth_check(FamilyIndex k, long n, const PrecisionConfig& prec) {
    if (n < 1) throw std::invalid_argument("growth check requires n >= 1");
    KFibState st(k);
    while (st.index() < n) st.advance();
    BigInt fn = st.value();
    st.advance();
    BigInt fn1 = st.value();
    mpq_class ratio(fn1, fn);
    ratio.canonicalize();
    Ball alpha = dominant_root(k, prec);
    const auto p = static_cast<mpfr_prec_t>(prec.working_bits);
    Interval ratio_iv = Interval::of_q(ratio, p);
    return iv_abs(iv_sub(ratio_iv, alpha.abs_interval()));
}

}  // namespace fibroot
