#include <algorithm>
#include <string>

#include "distapx/gadgets.hpp"

namespace distapx {

const char* cc_kind_name(CCKind k) {
  switch (k) {
    case CCKind::disj: return "disj";
    case CCKind::tribes: return "tribes";
    case CCKind::ov: return "ov";
    case CCKind::hse: return "hse";
  }
  return "?";
}

void CCInstance::validate() const {
  auto check = [&](const BitMatrix& m, const char* who) {
    if (static_cast<int>(m.size()) != n) throw std::invalid_argument(std::string(who) + ": expected " + std::to_string(n) + " rows");
    for (const auto& row : m) {
      if (static_cast<int>(row.size()) != d) throw std::invalid_argument(std::string(who) + ": row width differs from d");
      for (auto bit : row)
        if (bit > 1) throw std::invalid_argument(std::string(who) + ": entries must be 0/1");
    }
  };
  if (n < 1) throw std::invalid_argument("cc instance: N must be >= 1");
  if (kind == CCKind::disj && d != 1) throw std::invalid_argument("disj instance: d must be 1");
  if (kind == CCKind::tribes && d != n) throw std::invalid_argument("tribes instance: rows must have length N");
  if (d < 1) throw std::invalid_argument("cc instance: d must be >= 1");
  check(alice, "alice");
  check(bob, "bob");
}

namespace {

bool orthogonal(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
  for (std::size_t c = 0; c < a.size(); ++c)
    if (a[c] && b[c]) return false;
  return true;
}

}  // namespace

bool eval_cc(const CCInstance& inst) {
  inst.validate();
  const auto& a = inst.alice;
  const auto& b = inst.bob;
  switch (inst.kind) {
    case CCKind::disj:
      for (int i = 0; i < inst.n; ++i)
        if (a[i][0] && b[i][0]) return false;
      return true;
    case CCKind::tribes:
      for (int i = 0; i < inst.n; ++i)
        if (orthogonal(a[i], b[i])) return true;
      return false;
    case CCKind::ov:
      for (const auto& x : a)
        for (const auto& y : b)
          if (orthogonal(x, y)) return true;
      return false;
    case CCKind::hse:
      for (const auto& x : a) {
        if (std::none_of(b.begin(), b.end(), [&](const auto& y) { return orthogonal(x, y); })) return true;
      }
      return false;
  }
  return false;
}

CCInstance random_instance(CCKind kind, int n, int d, Rng& rng, double p_one) {
  CCInstance inst;
  inst.kind = kind;
  inst.n = n;
  inst.d = kind == CCKind::disj ? 1 : kind == CCKind::tribes ? n : d;
  for (BitMatrix* m : {&inst.alice, &inst.bob}) {
    m->assign(n, std::vector<std::uint8_t>(inst.d, 0));
    for (auto& row : *m)
      for (auto& bit : row) bit = rng.coin(p_one);
  }
  return inst;
}

int disj_index_width(int n) {
  int w = 0;
  while ((1LL << w) < n) ++w;
  return std::max(w, 1);
}

CCInstance disj_to_hse(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y) {
  if (x.empty() || x.size() != y.size()) throw std::invalid_argument("disj_to_hse: X and Y need the same length N >= 1");
  const int n = static_cast<int>(x.size());
  const int w = disj_index_width(n);
  CCInstance inst;
  inst.kind = CCKind::hse;
  inst.n = n;
  inst.d = 2 * w + 1;
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint8_t> a(inst.d), b(inst.d);
    for (int k = 0; k < w; ++k) {
      const std::uint8_t bit = (i >> (w - 1 - k)) & 1;
      a[k] = bit;
      a[w + k] = !bit;
      b[k] = !bit;
      b[w + k] = bit;
    }
    a[2 * w] = x[i] != 0;
    b[2 * w] = y[i] != 0;
    inst.alice.push_back(std::move(a));
    inst.bob.push_back(std::move(b));
  }
  return inst;
}

}  // namespace distapx
