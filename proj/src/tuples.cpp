#include "pbrat/tuples.hpp"

#include <algorithm>
#include <numeric>

namespace pbrat {

namespace {

Quad sorted_positive(Quad q, const char* what) {
  for (Int x : q) {
    if (x < 1) throw Error(ErrorKind::InvalidArgument, std::string(what) + ": non-positive entry " + to_string(x));
  }
  std::sort(q.begin(), q.end());
  return q;
}

Int lcm_except(std::span<const Int> t, std::size_t skip) {
  Int l = 1;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (j != skip) l = lcm(l, t[j]);
  }
  return l;
}

}  // namespace

ExponentTuple::ExponentTuple(Quad a) : a_(sorted_positive(a, "exponent tuple")) {}

WeightSystem WeightSystem::make(Quad weights, Int degree) {
  WeightSystem ws;
  ws.w = sorted_positive(weights, "weight system");
  ws.L = lcm_all(ws.w);
  if (degree < 1 || degree % ws.L != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "degree " + to_string(degree) + " is not a positive multiple of lcm(w) = " + to_string(ws.L));
  }
  ws.degree = degree;
  ws.n = degree / ws.L;
  Int sum = 0;
  for (Int x : ws.w) sum = checked_add(sum, x);
  ws.alpha = checked_sub(degree, sum);
  ws.e = gcd_all(ws.w);
  return ws;
}

bool is_well_formed(std::span<const Int> t) {
  if (t.size() < 2) return false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    Int g = 0;
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (j != i) g = gcd(g, t[j]);
    }
    if (g != 1) return false;
  }
  return true;
}

unsigned cotype(std::span<const Int> t) {
  const Int full = lcm_all(t);
  unsigned count = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (lcm_except(t, i) != full) ++count;
  }
  return count;
}

WeightSystem weights_of(const ExponentTuple& t) {
  const Int d = lcm_all(t.values());
  Quad w;
  for (std::size_t i = 0; i < 4; ++i) w[i] = d / t[i];
  return WeightSystem::make(w, d);
}

std::vector<Int> reduce_sequence(std::vector<Int> a, std::span<const std::size_t> order,
                                 std::vector<std::vector<Int>>* trace) {
  if (trace) trace->push_back(a);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i : order) {
      const Int next = gcd(a[i], lcm_except(a, i));
      if (next != a[i]) {
        a[i] = next;
        changed = true;
        if (trace) trace->push_back(a);
      }
    }
  }
  return a;
}

Reduction reduce_to_cotype0(const ExponentTuple& t) {
  static constexpr std::array<std::size_t, 4> kOrder{0, 1, 2, 3};
  std::vector<std::vector<Int>> trace;
  const auto& v = t.values();
  auto out = reduce_sequence(std::vector<Int>(v.begin(), v.end()), kOrder, &trace);
  return Reduction{ExponentTuple(Quad{out[0], out[1], out[2], out[3]}), std::move(trace)};
}

bool pure_axis_split(Int a, Int c) {
  if (a < 1 || c < 1) throw Error(ErrorKind::InvalidArgument, "pure_axis_split needs positive arguments");
  if (gcd(a, c) != 1) {
    throw Error(ErrorKind::NotCoprime, "gcd(" + to_string(a) + ", " + to_string(c) + ") != 1");
  }
  const Int target = checked_mul(a, c);
  for (Int m = 0; m <= c; ++m) {
    const Int rest = target - m * a;
    if (rest % c != 0) continue;
    const Int n = rest / c;
    if (m != 0 && n != 0) return false;
  }
  return true;
}

bool is_paired_coprime(const Quad& s) {
  return s[0] == s[1] && s[2] == s[3] && gcd(s[0], s[2]) == 1;
}

}  // namespace pbrat
