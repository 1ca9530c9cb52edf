#include "fibrant/fwfs.hpp"

#include <memory>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace fibrant {

namespace {

constexpr std::size_t kPairCap = 500;
constexpr std::size_t kSquareCap = 200;
constexpr std::size_t kFactorCap = 250;

Morphism from_zero(const Module& x) {
  return zero_morphism(zero_module(x.algebra()), x);
}

Morphism to_zero(const Module& x) {
  return zero_morphism(x, zero_module(x.algebra()));
}

}  // namespace

MorphismClass memoized(MorphismClass c) {
  auto cache = std::make_shared<std::unordered_map<std::string, bool>>();
  auto mutex = std::make_shared<std::mutex>();
  auto decide = c.decide;
  return {c.description, [cache, mutex, decide](const Morphism& f) {
            std::string key = describe(f);
            {
              std::lock_guard<std::mutex> lock(*mutex);
              auto it = cache->find(key);
              if (it != cache->end()) return it->second;
            }
            bool result = decide(f);
            std::lock_guard<std::mutex> lock(*mutex);
            (*cache)[key] = result;
            return result;
          }};
}

ObjectClass memoized(ObjectClass c) {
  auto cache = std::make_shared<std::unordered_map<std::string, bool>>();
  auto mutex = std::make_shared<std::mutex>();
  auto decide = c.decide;
  return {c.description, [cache, mutex, decide](const Module& m) {
            std::string key = describe(m);
            {
              std::lock_guard<std::mutex> lock(*mutex);
              auto it = cache->find(key);
              if (it != cache->end()) return it->second;
            }
            bool result = decide(m);
            std::lock_guard<std::mutex> lock(*mutex);
            (*cache)[key] = result;
            return result;
          }};
}

bool tcofib_membership(const Morphism& f, const Module& tc_generator) {
  auto split = split_mono_check(f);
  if (!split) return false;
  return add_membership(split->cokernel_part.target(), tc_generator);
}

bool fib_membership(const Morphism& f, const Module& tc_generator) {
  return hom_epic_check(tc_generator, f);
}

Factorization factorize_tcofib_fib(const Morphism& f, const Module& tc_generator) {
  Morphism t = right_approximation(tc_generator, f.target());
  const Module& a = f.source();
  auto sum = direct_sum({a, t.source()}, a.algebra());
  Morphism first = sum.injections[0];
  Morphism second = row_morphism({f, t}, sum.sum);
  return {first, second};
}

bool weq_membership(const Morphism& f, const Fwfs& s) {
  Factorization fac = factorize_tcofib_fib(f, s.tc_generator);
  return s.tfib.contains(fac.second);
}

ModelStructure derive_structure(const Fwfs& s) {
  ModelStructure m;
  m.algebra = s.algebra;
  m.tc_generator = s.tc_generator;
  m.tf_generator = s.tf_generator;
  m.cofib = s.cofib;
  m.tfib = s.tfib;
  Module gen = s.tc_generator;
  m.tcofib = memoized({"split monomorphisms with cokernel in add(generator)",
                       [gen](const Morphism& f) { return tcofib_membership(f, gen); }});
  m.fib = memoized({"Hom(generator, -)-epic morphisms",
                    [gen](const Morphism& f) { return fib_membership(f, gen); }});
  Fwfs base = s;
  m.weq = memoized(
      {"weak equivalences", [base](const Morphism& f) { return weq_membership(f, base); }});
  MorphismClass cofib = s.cofib;
  MorphismClass tfib = s.tfib;
  m.cofibrant = memoized({"objects with 0 -> x a cofibration",
                          [cofib](const Module& x) { return cofib.contains(from_zero(x)); }});
  m.trivial_objects = memoized({"objects with x -> 0 a trivial fibration",
                                [tfib](const Module& x) { return tfib.contains(to_zero(x)); }});
  ObjectClass cf = m.cofibrant;
  ObjectClass tr = m.trivial_objects;
  m.core = {"cofibrant trivial objects",
            [cf, tr](const Module& x) { return cf.contains(x) && tr.contains(x); }};
  m.factor_cofib_tfib = s.factor;
  m.factor_tcofib_fib = [gen](const Morphism& f) { return factorize_tcofib_fib(f, gen); };
  return m;
}

bool Report::all_passed() const {
  for (const auto& line : lines) {
    if (!line.passed) return false;
  }
  return true;
}

std::string Report::to_string() const {
  std::ostringstream out;
  for (const auto& line : lines) {
    out << "AXIOM " << line.axiom << (line.passed ? " PASS" : " FAIL");
    if (!line.passed && !line.detail.empty()) out << "  # " << line.detail;
    out << "\n";
  }
  return out.str();
}

Report verify_fwfs(const Fwfs& s, const Sample& sample) {
  Report report;
  auto add_line = [&report](const std::string& name, bool ok, const std::string& detail) {
    report.lines.push_back({name, ok, ok ? std::string() : detail});
  };

  // Composition closure of both classes.
  {
    bool ok_cofib = true;
    bool ok_tfib = true;
    std::string detail_cofib;
    std::string detail_tfib;
    std::size_t seen = 0;
    for (const auto& f : sample.morphisms) {
      for (const auto& g : sample.morphisms) {
        if (!(f.target() == g.source())) continue;
        if (++seen > kPairCap) break;
        Morphism gf = compose(g, f);
        if (ok_cofib && s.cofib.contains(f) && s.cofib.contains(g) && !s.cofib.contains(gf)) {
          ok_cofib = false;
          detail_cofib = "composite leaves the class: " + describe(f) + " then " + describe(g);
        }
        if (ok_tfib && s.tfib.contains(f) && s.tfib.contains(g) && !s.tfib.contains(gf)) {
          ok_tfib = false;
          detail_tfib = "composite leaves the class: " + describe(f) + " then " + describe(g);
        }
      }
      if (seen > kPairCap) break;
    }
    add_line("composition-left", ok_cofib, detail_cofib);
    add_line("composition-right", ok_tfib, detail_tfib);
  }

  // Identities belong to both classes.
  {
    bool ok = true;
    std::string detail;
    for (const auto& x : sample.objects) {
      Morphism id = identity_morphism(x);
      if (!s.cofib.contains(id) || !s.tfib.contains(id)) {
        ok = false;
        detail = "identity of " + describe(x) + " missing from a class";
        break;
      }
    }
    add_line("identities", ok, detail);
  }

  // Retract closure: a class member stays in the class when compressed
  // off a direct-sum inflation f -> f + g.
  {
    bool ok = true;
    std::string detail;
    std::size_t seen = 0;
    for (const auto& f : sample.morphisms) {
      bool in_cofib = s.cofib.contains(f);
      bool in_tfib = s.tfib.contains(f);
      if (!in_cofib && !in_tfib) continue;
      for (const auto& g : sample.morphisms) {
        if (++seen > kPairCap) break;
        auto src = direct_sum({f.source(), g.source()}, f.source().algebra());
        auto tgt = direct_sum({f.target(), g.target()}, f.target().algebra());
        Morphism fg = add(compose(tgt.injections[0], compose(f, src.projections[0])),
                          compose(tgt.injections[1], compose(g, src.projections[1])));
        // f is a retract of f + g via the canonical inclusions and
        // projections, so membership of f + g must pull back to f.
        if (s.cofib.contains(fg) && !in_cofib) {
          ok = false;
          detail = "retract leaves left class: " + describe(f);
        }
        if (s.tfib.contains(fg) && !in_tfib) {
          ok = false;
          detail = "retract leaves right class: " + describe(f);
        }
        if (!ok) break;
      }
      if (!ok || seen > kPairCap) break;
    }
    add_line("retracts", ok, detail);
  }

  // Lifting: every commuting square (left class against right class)
  // admits a diagonal filler.
  {
    bool ok = true;
    std::string detail;
    std::size_t seen = 0;
    for (const auto& l : sample.morphisms) {
      if (!s.cofib.contains(l)) continue;
      for (const auto& r : sample.morphisms) {
        if (!s.tfib.contains(r)) continue;
        for (const auto& u : hom_basis(l.source(), r.source())) {
          for (const auto& v : hom_basis(l.target(), r.target())) {
            LiftingProblem p{u, l, r, v};
            if (!commutes(p)) continue;
            if (++seen > kSquareCap) break;
            if (!solve_lifting(p)) {
              ok = false;
              detail = "no lift for " + describe(l) + " against " + describe(r);
            }
            if (!ok) break;
          }
          if (!ok || seen > kSquareCap) break;
        }
        if (!ok || seen > kSquareCap) break;
      }
      if (!ok || seen > kSquareCap) break;
    }
    add_line("lifting", ok, detail);
  }

  // Factorization through the supplied factor oracle.
  {
    bool ok = true;
    std::string detail;
    std::size_t seen = 0;
    for (const auto& f : sample.morphisms) {
      if (++seen > kFactorCap) break;
      Factorization fac = s.factor(f);
      if (!(compose(fac.second, fac.first) == f)) {
        ok = false;
        detail = "factorization does not compose back: " + describe(f);
      } else if (!s.cofib.contains(fac.first)) {
        ok = false;
        detail = "first factor outside left class: " + describe(f);
      } else if (!s.tfib.contains(fac.second)) {
        ok = false;
        detail = "second factor outside right class: " + describe(f);
      }
      if (!ok) break;
    }
    add_line("factorization", ok, detail);
  }

  // Right cancellation in the right class: f and g f there force g there.
  {
    bool ok = true;
    std::string detail;
    std::size_t seen = 0;
    for (const auto& f : sample.morphisms) {
      if (!s.tfib.contains(f)) continue;
      for (const auto& g : sample.morphisms) {
        if (!(f.target() == g.source())) continue;
        if (++seen > kPairCap) break;
        if (s.tfib.contains(compose(g, f)) && !s.tfib.contains(g)) {
          ok = false;
          detail = "right cancellation fails: " + describe(f) + " then " + describe(g);
          break;
        }
      }
      if (!ok || seen > kPairCap) break;
    }
    add_line("right-cancellation", ok, detail);
  }

  // The intersection objects are exactly add(tc_generator): in particular
  // the generator witnesses contravariant finiteness of the intersection.
  {
    bool ok = true;
    std::string detail;
    for (const auto& x : sample.objects) {
      bool core = s.cofib.contains(from_zero(x)) && s.tfib.contains(to_zero(x));
      bool in_add = add_membership(x, s.tc_generator);
      if (core != in_add) {
        ok = false;
        detail = "core/add(generator) mismatch at " + describe(x);
        break;
      }
    }
    add_line("core-generator", ok, detail);
  }

  return report;
}

}  // namespace fibrant
