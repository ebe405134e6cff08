#ifndef PCL_ALGEBRAIC_HPP
#define PCL_ALGEBRAIC_HPP

#include <memory>
#include <vector>

#include "pcl/rational.hpp"

namespace pcl {

// Q[a]/(m(a)) with m monic irreducible. Coefficients of m are stored low to
// high, m[deg] == 1. Extension degree is kept small (<= 6) by the callers.
struct NumberField {
    std::vector<Rational> minpoly;
    int degree() const { return static_cast<int>(minpoly.size()) - 1; }
};

class AlgNum {
  public:
    AlgNum() : c_{Rational(0)} {}
    AlgNum(int v) : c_{Rational(v)} {}
    explicit AlgNum(const Rational& q) : c_{q} {}
    AlgNum(std::shared_ptr<const NumberField> f, std::vector<Rational> c)
        : fld_(std::move(f)), c_(std::move(c)) {
        trim();
    }

    static AlgNum generator(std::shared_ptr<const NumberField> f) {
        if (f->degree() == 1) {
            // a = -m[0]
            return AlgNum(-f->minpoly[0]);
        }
        std::vector<Rational> c(2, Rational(0));
        c[1] = 1;
        return AlgNum(std::move(f), std::move(c));
    }

    const std::shared_ptr<const NumberField>& field() const { return fld_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_rational() const { return c_.size() <= 1; }
    Rational rational_value() const { return c_.empty() ? Rational(0) : c_[0]; }
    bool is_zero_val() const {
        for (auto& q : c_)
            if (sgn(q) != 0) return false;
        return true;
    }

    AlgNum operator-() const {
        std::vector<Rational> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return AlgNum(fld_, std::move(r));
    }
    AlgNum operator+(const AlgNum& o) const {
        auto f = unify(o);
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return AlgNum(f, std::move(r));
    }
    AlgNum operator-(const AlgNum& o) const { return *this + (-o); }
    AlgNum operator*(const AlgNum& o) const {
        auto f = unify(o);
        std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        reduce(f, r);
        return AlgNum(f, std::move(r));
    }
    AlgNum operator/(const AlgNum& o) const { return *this * o.inverse(); }

    bool operator==(const AlgNum& o) const {
        return (*this - o).is_zero_val();
    }
    bool operator!=(const AlgNum& o) const { return !(*this == o); }

    AlgNum inverse() const;

  private:
    std::shared_ptr<const NumberField> fld_; // null: plain rational
    std::vector<Rational> c_;                // low-to-high dense coefficients

    void trim() {
        while (c_.size() > 1 && sgn(c_.back()) == 0) c_.pop_back();
        if (c_.empty()) c_.push_back(Rational(0));
    }
    std::shared_ptr<const NumberField> unify(const AlgNum& o) const {
        if (fld_) return fld_;
        return o.fld_;
    }
    static void reduce(const std::shared_ptr<const NumberField>& f, std::vector<Rational>& r);
};

} // namespace pcl

#endif
