#include "gmlab/hilbert/hilbert.hpp"

#include <algorithm>

namespace gmlab {

namespace {

// Keep only minimal generators of a monomial ideal.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& k : out) {
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(m);
  }
  return out;
}

std::vector<long long> poly_mul(const std::vector<long long>& a,
                                const std::vector<long long>& b) {
  std::vector<long long> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void poly_add_shifted(std::vector<long long>& a,
                      const std::vector<long long>& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

std::vector<long long> numerator_rec(std::vector<Monomial> gens,
                                     std::size_t nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().degree() == 0) return {0};  // contains 1

  // coprime base case: product of (1 - t^deg)
  std::vector<int> occurrences(nvars, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < nvars; ++i)
      if (g.exponent(i) != 0) ++occurrences[i];
  std::size_t pivot_var = nvars;
  int best = 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (occurrences[i] > best) {
      best = occurrences[i];
      pivot_var = i;
    }
  }
  if (pivot_var == nvars) {
    std::vector<long long> acc{1};
    for (const auto& g : gens) {
      std::vector<long long> factor(g.degree() + 1, 0);
      factor[0] = 1;
      factor[g.degree()] = -1;
      acc = poly_mul(acc, factor);
    }
    return acc;
  }

  const std::vector<int> unit(nvars, 1);
  // M + (x): x plus the generators not involving x
  std::vector<Monomial> plus{Monomial::variable(nvars, pivot_var, unit)};
  for (const auto& g : gens)
    if (g.exponent(pivot_var) == 0) plus.push_back(g);
  // M : x: divide one power of x out of each generator that has it
  std::vector<Monomial> colon;
  const Monomial xv = Monomial::variable(nvars, pivot_var, unit);
  for (const auto& g : gens) {
    if (g.exponent(pivot_var) > 0)
      colon.push_back(g.quotient(xv));
    else
      colon.push_back(g);
  }
  std::vector<long long> result = numerator_rec(std::move(plus), nvars);
  std::vector<long long> shifted = numerator_rec(std::move(colon), nvars);
  poly_add_shifted(result, shifted, 1);
  return result;
}

long long binom_ll(long long n, long long k) {
  if (k < 0 || n < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void trim(std::vector<long long>& v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
}

}  // namespace

std::vector<long long> hilbert_numerator(std::vector<Monomial> gens,
                                         std::size_t nvars) {
  auto r = numerator_rec(std::move(gens), nvars);
  trim(r);
  return r;
}

HilbertData::HilbertData(std::vector<long long> numerator, std::size_t nvars)
    : numerator_(std::move(numerator)), nvars_(nvars) {
  trim(numerator_);
  // strip all (1-t) factors
  reduced_ = numerator_;
  std::size_t strips = 0;
  auto value_at_one = [](const std::vector<long long>& p) {
    long long s = 0;
    for (long long c : p) s += c;
    return s;
  };
  bool zero = reduced_.size() == 1 && reduced_[0] == 0;
  while (!zero && value_at_one(reduced_) == 0) {
    // divide by (1 - t): q_i = sum_{j <= i} p_j
    std::vector<long long> q(reduced_.size() - 1, 0);
    long long run = 0;
    for (std::size_t i = 0; i + 1 < reduced_.size(); ++i) {
      run += reduced_[i];
      q[i] = run;
    }
    reduced_ = std::move(q);
    trim(reduced_);
    ++strips;
  }
  if (zero) {
    cone_dim_ = -1;  // unit ideal: empty cone
    degree_ = 0;
    return;
  }
  cone_dim_ = static_cast<int>(nvars_ - strips);
  degree_ = value_at_one(reduced_);

  // Hilbert polynomial: P(T) = sum_i reduced_[i] * binom(T - i + D - 1, D - 1)
  const int D = cone_dim_;
  if (D <= 0) {
    degree_ = (D == 0) ? degree_ : 0;
    return;  // projectively empty: P = 0
  }
  hp_.assign(static_cast<std::size_t>(D), Rat(0));
  for (std::size_t i = 0; i < reduced_.size(); ++i) {
    if (reduced_[i] == 0) continue;
    // expand binom(T + (D - 1 - i), D - 1) = prod_{j=1}^{D-1} (T + D - 1 - i - (j-1)) / (D-1)!
    std::vector<Rat> term{Rat(1)};
    for (int j = 0; j < D - 1; ++j) {
      const long long c = D - 1 - static_cast<long long>(i) - j;
      std::vector<Rat> next(term.size() + 1, Rat(0));
      for (std::size_t k = 0; k < term.size(); ++k) {
        next[k + 1] = next[k + 1] + term[k];
        next[k] = next[k] + term[k] * Rat(c);
      }
      term = std::move(next);
    }
    long long fact = 1;
    for (int j = 2; j <= D - 1; ++j) fact *= j;
    for (std::size_t k = 0; k < term.size(); ++k)
      hp_[k] = hp_[k] + term[k] * Rat(reduced_[i]) / Rat(fact);
  }

  // internal consistency: P(d) must match the exact Hilbert function past
  // the regularity bound
  const long long bound =
      std::max<long long>(0, static_cast<long long>(numerator_.size()) -
                                 static_cast<long long>(nvars_) + 1);
  for (long long d = bound; d < bound + 3; ++d) {
    Rat v = hp_eval(d);
    if (!v.is_integer() || v.num != hilbert_function(d))
      throw Error("hilbert polynomial/function mismatch at degree " +
                  std::to_string(d));
  }
}

Rat HilbertData::hp_eval(long long t) const {
  Rat acc(0);
  Rat power(1);
  for (const auto& c : hp_) {
    acc = acc + c * power;
    power = power * Rat(t);
  }
  return acc;
}

long long HilbertData::hilbert_function(long long d) const {
  if (d < 0) return 0;
  long long acc = 0;
  for (std::size_t i = 0; i < numerator_.size(); ++i) {
    if (numerator_[i] == 0) continue;
    acc += numerator_[i] *
           binom_ll(d - static_cast<long long>(i) +
                        static_cast<long long>(nvars_) - 1,
                    static_cast<long long>(nvars_) - 1);
  }
  return acc;
}

long long HilbertData::chi() const {
  if (hp_.empty()) return 0;
  if (!hp_[0].is_integer())
    throw Error("non-integral chi");
  return hp_[0].num;
}

long long HilbertData::sectional_genus() const {
  if (proj_dim() != 2) throw NotASurface(proj_dim());
  // P(t) = (d/2) t^2 + c1 t + chi, g = d/2 + 1 - c1
  const Rat c1 = hp_[1];
  const Rat g = Rat(degree_, 2) + Rat(1) - c1;
  if (!g.is_integer()) throw Error("non-integral sectional genus");
  return g.num;
}

std::string HilbertData::hp_to_string() const {
  if (hp_.empty()) return "0";
  std::string s;
  for (std::size_t k = hp_.size(); k-- > 0;) {
    if (hp_[k] == Rat(0) && hp_.size() > 1) continue;
    if (!s.empty()) s += " + ";
    s += "(" + hp_[k].to_string() + ")";
    if (k == 1) s += "*t";
    if (k > 1) s += "*t^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

HilbertData invariants(const Ideal& I, const Budget& budget) {
  if (!I.ring()->unit_weights())
    throw InvalidInput("hilbert invariants need unit weights");
  auto gb = I.groebner(MonomialOrder::degrevlex(), budget);
  std::vector<Monomial> leads;
  for (const auto& g : gb->polys()) leads.push_back(g.lead_monomial());
  return HilbertData(hilbert_numerator(std::move(leads), I.ring()->nvars()),
                     I.ring()->nvars());
}

long long scheme_length(const Ideal& I, const Budget& budget) {
  HilbertData h = invariants(I, budget);
  if (h.proj_dim() != 0)
    throw NonGenericIntersection("length of a scheme of dimension " +
                                 std::to_string(h.proj_dim()));
  return h.degree();
}

}  // namespace gmlab
