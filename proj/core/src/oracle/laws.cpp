#include "negset/oracle/laws.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "negset/algebra.hpp"
#include "negset/error.hpp"
#include "negset/oracle/enumerate.hpp"

namespace negset::oracle {

namespace {

using Args = std::span<const NegotiationSet* const>;

constexpr std::size_t kCapArity1 = kEnumerationCap;
constexpr std::size_t kCapArity2 = 5;
constexpr std::size_t kCapArity3 = 4;
constexpr std::size_t kCapDiscSweep = 3;

constexpr std::array<LawInfo, 23> kCatalog = {{
    {LawId::idempotence_odot, "idempotence-odot", 1, Expectation::holds, 5, kCapArity1, false,
     "A odot A = A"},
    {LawId::idempotence_oplus, "idempotence-oplus", 1, Expectation::holds, 5, kCapArity1, false,
     "A oplus A = A"},
    {LawId::commutativity_odot, "commutativity-odot", 2, Expectation::holds, 5, kCapArity2, false,
     "A odot B = B odot A"},
    {LawId::commutativity_oplus, "commutativity-oplus", 2, Expectation::holds, 5, kCapArity2, false,
     "A oplus B = B oplus A"},
    {LawId::associativity_odot, "associativity-odot", 3, Expectation::holds, 4, kCapArity3, false,
     "(A odot B) odot C = A odot (B odot C)"},
    {LawId::associativity_oplus, "associativity-oplus", 3, Expectation::holds, 4, kCapArity3, false,
     "(A oplus B) oplus C = A oplus (B oplus C)"},
    {LawId::absorption_oplus_odot, "absorption-oplus-odot", 2, Expectation::holds, 5, kCapArity2, false,
     "A oplus (A odot B) = A"},
    {LawId::absorption_odot_oplus, "absorption-odot-oplus", 2, Expectation::refuted, 5, kCapArity2, false,
     "A odot (A oplus B) = A"},
    {LawId::distributivity_oplus_over_odot, "distributivity-oplus-over-odot", 3, Expectation::refuted, 4,
     kCapArity3, false, "A oplus (B odot C) = (A oplus B) odot (A oplus C)"},
    {LawId::distributivity_odot_over_oplus, "distributivity-odot-over-oplus", 3, Expectation::refuted, 4,
     kCapArity3, false, "A odot (B oplus C) = (A odot B) oplus (A odot C)"},
    {LawId::bounds_upper, "bounds-upper", 3, Expectation::holds, 4, kCapArity3, false,
     "all A_j <= B implies odot(F) <= union(F) <= B"},
    {LawId::bounds_lower, "bounds-lower", 3, Expectation::holds, 4, kCapArity3, false,
     "B <= all A_j implies B <= inter(F) <= oplus(F)"},
    {LawId::demorgan_weak_1, "demorgan-weak-1", 3, Expectation::holds, 4, kCapArity3, false,
     "not odot(F) <=1 oplus(not F)"},
    {LawId::demorgan_weak_2, "demorgan-weak-2", 3, Expectation::holds, 4, kCapArity3, false,
     "oplus(not F) <=2 not odot(F)"},
    {LawId::demorgan_weak_3, "demorgan-weak-3", 3, Expectation::holds, 4, kCapArity3, false,
     "odot(not F) <=1 not oplus(F)"},
    {LawId::demorgan_weak_4, "demorgan-weak-4", 3, Expectation::holds, 4, kCapArity3, false,
     "not oplus(F) <=2 odot(not F)"},
    {LawId::fold_agreement_odot, "fold-agreement-odot", 3, Expectation::holds, 3, kCapArity3, false,
     "odot(F) = left fold of binary odot"},
    {LawId::fold_agreement_oplus, "fold-agreement-oplus", 3, Expectation::holds, 3, kCapArity3, false,
     "oplus(F) = left fold of binary oplus"},
    {LawId::identity_lemmas, "identity-lemmas", 1, Expectation::holds, 5, kCapArity1, false,
     "identities with the empty, full and half-empty sets"},
    {LawId::point_lemmas, "point-lemmas", 2, Expectation::holds, 5, kCapArity1, false,
     "x != y: oplus of points is [{},{}], odot of points is [{},{x,y}]"},
    {LawId::disc_closure_oplus, "disc-closure-oplus", 2, Expectation::holds, 3, kCapDiscSweep, true,
     "A, B in DISC implies A oplus B in DISC"},
    {LawId::disc_odot_weak_partial, "disc-odot-weak-partial", 2, Expectation::holds, 3, kCapDiscSweep,
     true, "A, B in DISC implies no weak-with-necessity violation in A odot B"},
    {LawId::complement_involution, "complement-involution", 1, Expectation::holds, 5, kCapArity1, false,
     "not not A = A"},
}};

template <class Op>
bool all_prefixes(Args args, Op op) {
  std::vector<NegotiationSet> family;
  family.reserve(args.size());
  for (const auto* a : args) {
    family.push_back(*a);
    if (!op(std::span<const NegotiationSet>(family))) return false;
  }
  return true;
}

std::vector<NegotiationSet> complements(std::span<const NegotiationSet> family) {
  std::vector<NegotiationSet> out;
  out.reserve(family.size());
  for (const auto& a : family) out.push_back(complement(a));
  return out;
}

template <class BinaryOp>
NegotiationSet left_fold(std::span<const NegotiationSet> family, BinaryOp op) {
  NegotiationSet acc = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) acc = op(acc, family[i]);
  return acc;
}

bool bounds(Args args, bool upper) {
  const NegotiationSet& b = *args.back();
  return all_prefixes(args.first(args.size() - 1), [&](std::span<const NegotiationSet> family) {
    if (upper) {
      bool premise = std::all_of(family.begin(), family.end(), [&](const auto& a) { return included(a, b); });
      if (!premise) return true;
      auto joined = union_all(family);
      return included(odot_all(family), joined) && included(joined, b);
    }
    bool premise = std::all_of(family.begin(), family.end(), [&](const auto& a) { return included(b, a); });
    if (!premise) return true;
    auto met = inter_all(family);
    return included(b, met) && included(met, oplus_all(family));
  });
}

bool demorgan(Args args, int which) {
  return all_prefixes(args, [&](std::span<const NegotiationSet> family) {
    auto negated = complements(family);
    switch (which) {
      case 1: return included(complement(odot_all(family)), oplus_all(negated), InclusionMode::necessity_only);
      case 2: return included(oplus_all(negated), complement(odot_all(family)), InclusionMode::admissibility_only);
      case 3: return included(odot_all(negated), complement(oplus_all(family)), InclusionMode::necessity_only);
      default: return included(complement(oplus_all(family)), odot_all(negated), InclusionMode::admissibility_only);
    }
  });
}

bool identities(const NegotiationSet& a) {
  const auto& u = a.universe();
  auto empty_n = special(u, SpecialKind::empty_n);
  auto full_n = special(u, SpecialKind::full_n);
  auto half = special(u, SpecialKind::half_empty);
  FiniteSet none(u);
  FiniteSet all = FiniteSet::full(u);
  return odot(a, full_n) == NegotiationSet(a.necessity(), all) &&
         odot(a, empty_n) == NegotiationSet(none, a.admissibility()) &&
         oplus(a, full_n) == NegotiationSet(a.admissibility(), a.admissibility()) &&
         oplus(a, empty_n) == empty_n && odot(a, half) == half && oplus(a, half) == a;
}

std::optional<std::size_t> point_of(const NegotiationSet& a) {
  auto members = a.admissibility().members();
  if (members.size() != 1) return std::nullopt;
  return members.front();
}

bool points(const NegotiationSet& xs, const NegotiationSet& ys) {
  auto x = point_of(xs);
  auto y = point_of(ys);
  if (!x || !y || *x == *y) return true;
  const auto& u = xs.universe();
  const auto& xn = u->name(*x);
  const auto& yn = u->name(*y);
  auto xh = special(u, SpecialKind::point_half, xn);
  auto x1 = special(u, SpecialKind::point_full, xn);
  auto yh = special(u, SpecialKind::point_half, yn);
  auto y1 = special(u, SpecialKind::point_full, yn);
  auto bottom = special(u, SpecialKind::empty_n);
  FiniteSet none(u);
  NegotiationSet both(none, none.with(*x).with(*y));
  return oplus(xh, yh) == bottom && oplus(xh, y1) == bottom && oplus(x1, y1) == bottom &&
         odot(xh, yh) == both && odot(xh, y1) == both && odot(x1, y1) == both;
}

bool holds(LawId id, Args args, const ContradictionSpec* spec) {
  auto arg = [&](std::size_t i) -> const NegotiationSet& { return *args[i]; };
  switch (id) {
    case LawId::idempotence_odot: return odot(arg(0), arg(0)) == arg(0);
    case LawId::idempotence_oplus: return oplus(arg(0), arg(0)) == arg(0);
    case LawId::commutativity_odot: return odot(arg(0), arg(1)) == odot(arg(1), arg(0));
    case LawId::commutativity_oplus: return oplus(arg(0), arg(1)) == oplus(arg(1), arg(0));
    case LawId::associativity_odot:
      return odot(odot(arg(0), arg(1)), arg(2)) == odot(arg(0), odot(arg(1), arg(2)));
    case LawId::associativity_oplus:
      return oplus(oplus(arg(0), arg(1)), arg(2)) == oplus(arg(0), oplus(arg(1), arg(2)));
    case LawId::absorption_oplus_odot: return oplus(arg(0), odot(arg(0), arg(1))) == arg(0);
    case LawId::absorption_odot_oplus: return odot(arg(0), oplus(arg(0), arg(1))) == arg(0);
    case LawId::distributivity_oplus_over_odot:
      return oplus(arg(0), odot(arg(1), arg(2))) == odot(oplus(arg(0), arg(1)), oplus(arg(0), arg(2)));
    case LawId::distributivity_odot_over_oplus:
      return odot(arg(0), oplus(arg(1), arg(2))) == oplus(odot(arg(0), arg(1)), odot(arg(0), arg(2)));
    case LawId::bounds_upper: return bounds(args, true);
    case LawId::bounds_lower: return bounds(args, false);
    case LawId::demorgan_weak_1: return demorgan(args, 1);
    case LawId::demorgan_weak_2: return demorgan(args, 2);
    case LawId::demorgan_weak_3: return demorgan(args, 3);
    case LawId::demorgan_weak_4: return demorgan(args, 4);
    case LawId::fold_agreement_odot:
      return all_prefixes(args, [](std::span<const NegotiationSet> f) {
        return odot_all(f) == left_fold(f, [](const auto& a, const auto& b) { return odot(a, b); });
      });
    case LawId::fold_agreement_oplus:
      return all_prefixes(args, [](std::span<const NegotiationSet> f) {
        return oplus_all(f) == left_fold(f, [](const auto& a, const auto& b) { return oplus(a, b); });
      });
    case LawId::identity_lemmas: return identities(arg(0));
    case LawId::point_lemmas: return points(arg(0), arg(1));
    case LawId::disc_closure_oplus:
      if (!is_disc(arg(0), *spec) || !is_disc(arg(1), *spec)) return true;
      return is_disc(oplus(arg(0), arg(1)), *spec);
    case LawId::disc_odot_weak_partial: {
      if (!is_disc(arg(0), *spec) || !is_disc(arg(1), *spec)) return true;
      auto violations = disc_violations(odot(arg(0), arg(1)), *spec);
      return std::none_of(violations.begin(), violations.end(), [](const DiscViolation& v) {
        return v.kind == ViolationKind::weak_with_necessity;
      });
    }
    case LawId::complement_involution: return complement(complement(arg(0))) == arg(0);
  }
  return true;
}

/// Visits every tuple of `arity` elements drawn from `pool`, in odometer order.
template <class Visit>
void for_each_tuple(const std::vector<NegotiationSet>& pool, std::size_t arity, Visit visit) {
  if (pool.empty()) return;
  std::vector<std::size_t> idx(arity, 0);
  std::vector<const NegotiationSet*> ptrs(arity, &pool[0]);
  while (true) {
    visit(Args(ptrs));
    std::size_t pos = arity;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < pool.size()) {
        ptrs[pos] = &pool[idx[pos]];
        break;
      }
      idx[pos] = 0;
      ptrs[pos] = &pool[0];
      if (pos == 0) return;
    }
    if (arity == 0) return;
  }
}

struct Sweep {
  LawReport& report;
  std::size_t limit;

  void record(LawId id, Args args, const ContradictionSpec* spec) {
    ++report.tuples_checked;
    if (holds(id, args, spec)) return;
    ++report.violation_count;
    if (report.counterexamples.size() >= limit) return;
    Counterexample ce;
    for (const auto* a : args) ce.args.push_back(*a);
    if (spec) ce.spec = *spec;
    report.counterexamples.push_back(std::move(ce));
  }
};

void sweep_disc(LawId id, const std::vector<NegotiationSet>& all, const ContradictionSpec& spec,
                Sweep& sweep) {
  std::vector<NegotiationSet> disc;
  for (const auto& a : all) {
    if (is_disc(a, spec)) disc.push_back(a);
  }
  for_each_tuple(disc, 2, [&](Args args) { sweep.record(id, args, &spec); });
}

}  // namespace

std::span<const LawInfo> law_catalog() { return kCatalog; }

const LawInfo& law_info(LawId id) {
  for (const auto& info : kCatalog) {
    if (info.id == id) return info;
  }
  throw Error(ErrorCode::UnknownLaw, "unknown law id");
}

std::string_view to_string(LawId id) { return law_info(id).name; }

LawId parse_law(std::string_view name) {
  for (const auto& info : kCatalog) {
    if (info.name == name) return info.id;
  }
  throw Error(ErrorCode::UnknownLaw, "unknown law '" + std::string(name) + "'");
}

std::string_view to_string(Verdict verdict) noexcept {
  return verdict == Verdict::holds_everywhere ? "holds-everywhere" : "counterexamples";
}

std::string_view to_string(Expectation expectation) noexcept {
  return expectation == Expectation::holds ? "holds" : "must-find-counterexample";
}

bool LawReport::matches_expectation() const noexcept {
  auto expected = law_info(law).expected;
  return expected == Expectation::holds ? violation_count == 0 : violation_count > 0;
}

bool law_holds_on(LawId id, std::span<const NegotiationSet> args, const ContradictionSpec* spec) {
  const auto& info = law_info(id);
  bool family_law = id == LawId::bounds_upper || id == LawId::bounds_lower ||
                    (id >= LawId::demorgan_weak_1 && id <= LawId::fold_agreement_oplus);
  std::size_t minimum = id == LawId::bounds_upper || id == LawId::bounds_lower ? 2 : 1;
  if (family_law ? args.size() < minimum : args.size() != info.arity) {
    throw Error(ErrorCode::EmptyFamily, "law " + std::string(info.name) + " got " +
                                            std::to_string(args.size()) + " argument(s)");
  }
  if (info.uses_contradictions && !spec) {
    throw Error(ErrorCode::ValidationError, "law " + std::string(info.name) + " needs contradiction relations");
  }
  for (std::size_t i = 1; i < args.size(); ++i) require_same_universe(args[0].universe(), args[i].universe());
  if (spec && !args.empty()) require_same_universe(args[0].universe(), spec->universe());

  std::vector<const NegotiationSet*> ptrs;
  for (const auto& a : args) ptrs.push_back(&a);
  return holds(id, ptrs, spec);
}

std::string describe(const Counterexample& counterexample) {
  std::string out;
  for (std::size_t i = 0; i < counterexample.args.size(); ++i) {
    if (i > 0) out += ' ';
    out += static_cast<char>('A' + i);
    out += '=' + counterexample.args[i].to_string();
  }
  if (counterexample.spec) {
    const auto& spec = *counterexample.spec;
    const auto& u = spec.universe();
    std::string relations;
    for (const auto& p : spec.strong_pairs()) relations += " strong" + pair_to_string(u, p);
    for (const auto& p : spec.weak_pairs()) relations += " weak" + pair_to_string(u, p);
    out += " with" + (relations.empty() ? std::string(" no relations") : relations);
  }
  return out;
}

LawReport check_law(LawId id, std::size_t size, const CheckOptions& options) {
  const auto& info = law_info(id);
  if (size == 0) throw Error(ErrorCode::EmptyUniverse, "universe size must be at least 1");
  std::size_t cap = info.size_cap;
  if (info.uses_contradictions && options.spec) cap = kCapArity2;
  if (size > cap && !options.unsafe_size) {
    throw Error(ErrorCode::UniverseTooLarge,
                "law " + std::string(info.name) + " is capped at universe size " + std::to_string(cap) +
                    "; requested " + std::to_string(size));
  }

  auto start = std::chrono::steady_clock::now();
  LawReport report;
  report.law = id;
  report.universe_size = size;
  Sweep sweep{report, options.limit};

  UniversePtr universe = letter_universe(size);

  if (id == LawId::point_lemmas) {
    std::vector<NegotiationSet> points;
    for (const auto& name : universe->names()) points.push_back(special(universe, SpecialKind::point_full, name));
    for (std::size_t x = 0; x < points.size(); ++x) {
      for (std::size_t y = 0; y < points.size(); ++y) {
        if (x == y) continue;
        std::array<const NegotiationSet*, 2> args{&points[x], &points[y]};
        sweep.record(id, args, nullptr);
      }
    }
  } else if (info.uses_contradictions) {
    auto all = enumerate_negsets(universe, std::max(size, kEnumerationCap));
    if (options.spec) {
      require_same_universe(universe, options.spec->universe());
      report.specs_checked = 1;
      sweep_disc(id, all, *options.spec, sweep);
    } else {
      std::vector<ObjectPair> pairs;
      for (std::size_t x = 0; x < size; ++x) {
        for (std::size_t y = x + 1; y < size; ++y) pairs.push_back({x, y});
      }
      std::uint64_t labelings = 1;
      for (std::size_t i = 0; i < pairs.size(); ++i) labelings *= 3;
      for (std::uint64_t code = 0; code < labelings; ++code) {
        std::vector<std::pair<std::size_t, std::size_t>> strong;
        std::vector<std::pair<std::size_t, std::size_t>> weak;
        std::uint64_t rest = code;
        for (const auto& p : pairs) {
          auto label = rest % 3;
          rest /= 3;
          if (label == 1) strong.emplace_back(p.first, p.second);
          if (label == 2) weak.emplace_back(p.first, p.second);
        }
        ContradictionSpec spec(universe, strong, weak);
        ++report.specs_checked;
        sweep_disc(id, all, spec, sweep);
      }
    }
  } else {
    auto all = enumerate_negsets(universe, std::max(size, kEnumerationCap));
    for_each_tuple(all, info.arity, [&](Args args) { sweep.record(id, args, nullptr); });
  }

  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace negset::oracle
