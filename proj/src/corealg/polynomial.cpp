#include "gmlab/corealg/polynomial.hpp"

#include <algorithm>

namespace gmlab {

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  Polynomial p(ring);
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ring->compare(a.mon, b.mon) > 0;
  });
  const FpField& F = ring->field();
  for (auto& t : terms) {
    if (t.coeff == 0) continue;
    if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
      p.terms_.back().coeff = F.add(p.terms_.back().coeff, t.coeff);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else {
      p.terms_.push_back(t);
    }
  }
  return p;
}

Polynomial Polynomial::constant(Ring ring, FpElt c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({Monomial::one(ring->nvars()), c});
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t i) {
  Polynomial p(ring);
  p.terms_.push_back(
      {Monomial::variable(ring->nvars(), i, ring->weights()), 1});
  return p;
}

Polynomial Polynomial::monomial_term(Ring ring, Monomial m, FpElt c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::tail() const {
  Polynomial r(ring_);
  r.terms_.assign(terms_.begin() + 1, terms_.end());
  return r;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mon.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.front().mon.degree();
  for (const auto& t : terms_)
    if (t.mon.degree() != d) return false;
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_, "polynomial addition");
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  const FpField& F = ring_->field();
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ring_->compare(terms_[i].mon, o.terms_[j].mon);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      FpElt s = F.add(terms_[i].coeff, o.terms_[j].coeff);
      if (s != 0) r.terms_.push_back({terms_[i].mon, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  const FpField& F = ring_->field();
  for (const auto& t : terms_) r.terms_.push_back({t.mon, F.neg(t.coeff)});
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_, "polynomial multiplication");
  const Polynomial& small = size() <= o.size() ? *this : o;
  const Polynomial& big = size() <= o.size() ? o : *this;
  Polynomial acc(ring_);
  for (const auto& t : small.terms_) acc = acc.axpy(t.coeff, t.mon, big);
  return acc;
}

Polynomial Polynomial::scaled(FpElt c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  const FpField& F = ring_->field();
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mon, F.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(lead_coeff()));
}

Polynomial Polynomial::axpy(FpElt c, const Monomial& m,
                            const Polynomial& g) const {
  if (c == 0 || g.is_zero()) return *this;
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  const FpField& F = ring_->field();
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    Monomial gm = g.terms_[j].mon * m;
    int cmp = ring_->compare(terms_[i].mon, gm);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back({std::move(gm), F.mul(c, g.terms_[j].coeff)});
      ++j;
    } else {
      FpElt s = F.add(terms_[i].coeff, F.mul(c, g.terms_[j].coeff));
      if (s != 0) r.terms_.push_back({terms_[i].mon, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j)
    r.terms_.push_back({g.terms_[j].mon * m, F.mul(c, g.terms_[j].coeff)});
  return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(ring_);
  const FpField& F = ring_->field();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const std::uint16_t e = t.mon.exponent(var);
    if (e == 0) continue;
    FpElt c = F.mul(t.coeff, F.reduce(e));
    if (c == 0) continue;
    std::vector<std::uint16_t> exps = t.mon.exponents();
    exps[var] = static_cast<std::uint16_t>(e - 1);
    out.push_back({Monomial(std::move(exps), ring_->weights()), c});
  }
  return from_terms(ring_, std::move(out));
}

FpElt Polynomial::evaluate(const Point& pt) const {
  if (pt.size() != ring_->nvars())
    throw RingMismatch("point/ring size mismatch in evaluation");
  const FpField& F = ring_->field();
  FpElt acc = 0;
  for (const auto& t : terms_) {
    FpElt v = t.coeff;
    for (std::size_t i = 0; i < pt.size(); ++i) {
      const std::uint16_t e = t.mon.exponent(i);
      if (e) v = F.mul(v, F.pow(pt[i], e));
    }
    acc = F.add(acc, v);
  }
  return acc;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->nvars())
    throw RingMismatch("substitution image count");
  const Ring target = images.empty() ? ring_ : images.front().ring();
  // powers[i][e] = images[i]^e, filled on demand
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    powers[i].push_back(Polynomial::constant(target, 1));
  Polynomial acc = Polynomial::zero(target);
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i) {
      const std::uint16_t e = t.mon.exponent(i);
      if (e == 0) continue;
      while (powers[i].size() <= e)
        powers[i].push_back(powers[i].back() * images[i]);
      prod = prod * powers[i][e];
    }
    acc = acc + prod;
  }
  return acc;
}

Polynomial Polynomial::in_ring(const Ring& target) const {
  if (!ring_->same_base(*target))
    throw RingMismatch("order change across different base rings");
  Polynomial r(target);
  std::vector<Term> ts = terms_;
  std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
    return target->compare(a.mon, b.mon) > 0;
  });
  r.terms_ = std::move(ts);
  return r;
}

Polynomial Polynomial::homogeneous_component(int deg) const {
  Polynomial r(ring_);
  for (const auto& t : terms_)
    if (t.mon.degree() == deg) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::divide_by_monomial(const Monomial& m) const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!m.divides(t.mon))
      throw InvalidInput("monomial division is not exact");
    r.terms_.push_back({t.mon.quotient(m), t.coeff});
  }
  return r;
}

int Polynomial::min_exponent(std::size_t var) const {
  int m = 0;
  bool first = true;
  for (const auto& t : terms_) {
    int e = t.mon.exponent(var);
    m = first ? e : std::min(m, e);
    first = false;
  }
  return m;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_->same_base(*o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  if (*ring_ == *o.ring_) {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].mon != o.terms_[i].mon ||
          terms_[i].coeff != o.terms_[i].coeff)
        return false;
    }
    return true;
  }
  return (*this - o.in_ring(ring_)).is_zero();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) out += "+";
    first = false;
    bool printed = false;
    if (t.coeff != 1 || t.mon.is_one()) {
      out += std::to_string(t.coeff);
      printed = true;
    }
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      const std::uint16_t e = t.mon.exponent(i);
      if (e == 0) continue;
      if (printed) out += "*";
      out += ring_->var_name(i);
      if (e > 1) out += "^" + std::to_string(e);
      printed = true;
    }
  }
  return out;
}

}  // namespace gmlab
