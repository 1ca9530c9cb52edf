#include "fibrant/algebra.hpp"

#include <algorithm>
#include <mutex>

namespace fibrant {

namespace {

std::mutex opposite_mutex;

}  // namespace

std::shared_ptr<const Algebra> Algebra::make(Quiver q, std::vector<Relation> rels, Field f,
                                             std::size_t bound) {
  auto a = std::shared_ptr<Algebra>(new Algebra(std::move(q), std::move(rels), f, bound));
  a->build_tables();
  return a;
}

Algebra::Algebra(Quiver q, std::vector<Relation> rels, Field f, std::size_t bound)
    : quiver_(std::move(q)), relations_(std::move(rels)), field_(f), bound_(bound) {
  if (bound_ < 1) throw invalid_presentation("admissibility bound must be >= 1");
  for (const auto& a : quiver_.arrows)
    if (a.source >= quiver_.vertex_count || a.target >= quiver_.vertex_count)
      throw invalid_presentation("arrow endpoint out of range");
  for (const auto& r : relations_) {
    if (r.terms.empty()) throw invalid_presentation("empty relation");
    auto ends = [&](const RelationTerm& t) -> std::pair<std::size_t, std::size_t> {
      if (t.arrows.empty()) throw invalid_presentation("relation term must be a nonempty path");
      std::size_t src = quiver_.arrows[t.arrows.front()].source;
      std::size_t cur = src;
      for (std::size_t ai : t.arrows) {
        if (ai >= quiver_.arrows.size()) throw invalid_presentation("relation arrow out of range");
        if (quiver_.arrows[ai].source != cur) throw invalid_presentation("relation term is not a path");
        cur = quiver_.arrows[ai].target;
      }
      return {src, cur};
    };
    auto [s0, t0] = ends(r.terms.front());
    for (const auto& t : r.terms)
      if (ends(t) != std::make_pair(s0, t0))
        throw invalid_presentation("relation terms are not parallel paths");
  }
}

void Algebra::build_tables() {
  const std::size_t n = quiver_.vertex_count;
  spaces_.assign(n * n, PathSpace{});

  // enumerate paths of length < bound, breadth-first so the per-pair lists
  // come out ordered by length then lexicographically
  std::vector<Path> frontier;
  for (std::size_t v = 0; v < n; ++v) frontier.push_back(Path{v, v, {}});
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      auto& sp = spaces_[p.source * n + p.target];
      sp.index.emplace(p.arrows, sp.paths.size());
      sp.paths.push_back(p);
      if (p.length() + 1 < bound_) {
        for (std::size_t ai = 0; ai < quiver_.arrows.size(); ++ai) {
          if (quiver_.arrows[ai].source != p.target) continue;
          Path q = p;
          q.arrows.push_back(ai);
          q.target = quiver_.arrows[ai].target;
          next.push_back(q);
        }
      }
    }
    frontier = std::move(next);
  }

  // truncated relation ideal per (v, w): vectors of p * r * q with p, q
  // paths; terms of length >= bound truncate to zero
  auto path_vector = [&](const std::vector<std::size_t>& word, std::size_t v, std::size_t w,
                         const Rational& coeff, Matrix& into) {
    if (word.size() >= bound_) return;  // dies in the quotient
    const auto& sp = spaces_[v * n + w];
    std::size_t idx = sp.index.at(word);
    into.at(idx, 0) += Scalar(coeff, field_);
  };

  std::vector<std::vector<Matrix>> ideal_cols(n * n);
  for (const auto& r : relations_) {
    std::size_t rs = quiver_.arrows[r.terms.front().arrows.front()].source;
    std::size_t rt = quiver_.arrows[r.terms.front().arrows.back()].target;
    // q: x -> rs, p: rt -> y
    for (std::size_t x = 0; x < n; ++x) {
      const auto& qs = spaces_[x * n + rs];
      for (const auto& q : qs.paths) {
        for (std::size_t y = 0; y < n; ++y) {
          const auto& ps = spaces_[rt * n + y];
          for (const auto& p : ps.paths) {
            Matrix vec(spaces_[x * n + y].paths.size(), 1, field_);
            for (const auto& term : r.terms) {
              std::vector<std::size_t> word = q.arrows;
              word.insert(word.end(), term.arrows.begin(), term.arrows.end());
              word.insert(word.end(), p.arrows.begin(), p.arrows.end());
              path_vector(word, x, y, term.coeff, vec);
            }
            if (!vec.is_zero()) ideal_cols[x * n + y].push_back(vec);
          }
        }
      }
    }
  }

  for (std::size_t vw = 0; vw < n * n; ++vw) {
    auto& sp = spaces_[vw];
    Matrix ideal(sp.paths.size(), 0, field_);
    for (const auto& c : ideal_cols[vw]) {
      Matrix cand = Matrix::hconcat(ideal, c);
      if (rank(cand) > ideal.cols()) ideal = std::move(cand);
    }
    sp.ideal = std::move(ideal);
    // pick the basis greedily among unit vectors modulo the ideal
    Matrix span = sp.ideal;
    for (std::size_t i = 0; i < sp.paths.size(); ++i) {
      Matrix unit(sp.paths.size(), 1, field_);
      unit.at(i, 0) = one_of(field_);
      Matrix cand = Matrix::hconcat(span, unit);
      if (rank(cand) > span.cols()) {
        span = std::move(cand);
        sp.basis.push_back(i);
        sp.basis_list.push_back(sp.paths[i]);
      }
    }
    Matrix units(sp.paths.size(), sp.basis.size(), field_);
    for (std::size_t j = 0; j < sp.basis.size(); ++j) units.at(sp.basis[j], j) = one_of(field_);
    sp.coord_system = Matrix::hconcat(units, sp.ideal);
  }

  // admissibility: every path of length == bound must lie in the relation
  // ideal. Checked inside the truncation at length == bound, a sufficient
  // certificate for (arrow ideal)^bound being contained in the ideal.
  {
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<std::size_t>>> full;
    std::vector<Path> frontier2;
    for (std::size_t v = 0; v < n; ++v) frontier2.push_back(Path{v, v, {}});
    while (!frontier2.empty()) {
      std::vector<Path> next;
      for (const auto& p : frontier2) {
        full[{p.source, p.target}].push_back(p.arrows);
        if (p.length() < bound_) {
          for (std::size_t ai = 0; ai < quiver_.arrows.size(); ++ai) {
            if (quiver_.arrows[ai].source != p.target) continue;
            Path q = p;
            q.arrows.push_back(ai);
            q.target = quiver_.arrows[ai].target;
            next.push_back(q);
          }
        }
      }
      frontier2 = std::move(next);
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const auto& words = full[{x, y}];
        std::map<std::vector<std::size_t>, std::size_t> idx;
        for (const auto& w : words) idx.emplace(w, idx.size());
        std::vector<std::size_t> maximal;
        for (std::size_t i = 0; i < words.size(); ++i)
          if (words[i].size() == bound_) maximal.push_back(i);
        if (maximal.empty()) continue;
        // span of p * r * q within words of length <= bound
        Matrix span(words.size(), 0, field_);
        for (const auto& r : relations_) {
          std::size_t rs = quiver_.arrows[r.terms.front().arrows.front()].source;
          std::size_t rt = quiver_.arrows[r.terms.front().arrows.back()].target;
          std::size_t rlen = 0;
          for (const auto& t : r.terms) rlen = std::max(rlen, t.arrows.size());
          for (const auto& qw : full[{x, rs}]) {
            for (const auto& pw : full[{rt, y}]) {
              bool fits = true;
              Matrix vec(words.size(), 1, field_);
              for (const auto& term : r.terms) {
                std::vector<std::size_t> word = qw;
                word.insert(word.end(), term.arrows.begin(), term.arrows.end());
                word.insert(word.end(), pw.begin(), pw.end());
                if (word.size() > bound_) {
                  fits = false;
                  break;
                }
                vec.at(idx.at(word), 0) += Scalar(term.coeff, field_);
              }
              if (!fits || vec.is_zero()) continue;
              Matrix cand = Matrix::hconcat(span, vec);
              if (rank(cand) > span.cols()) span = std::move(cand);
            }
          }
        }
        for (std::size_t i : maximal) {
          Matrix unit(words.size(), 1, field_);
          unit.at(i, 0) = one_of(field_);
          if (!column_space_membership(span, unit))
            throw non_admissible(
                "arrow-ideal power not contained in the relation ideal at bound " +
                std::to_string(bound_));
        }
      }
    }
  }
}

const std::vector<Path>& Algebra::basis_paths(std::size_t v, std::size_t w) const {
  return space(v, w).basis_list;
}

Matrix Algebra::path_coordinates(const Path& p) const {
  const auto& sp = space(p.source, p.target);
  Matrix coords(sp.basis.size(), 1, field_);
  if (p.length() >= bound_) return coords;
  Matrix vec(sp.paths.size(), 1, field_);
  vec.at(sp.index.at(p.arrows), 0) = one_of(field_);
  auto x = solve(sp.coord_system, vec);
  if (!x) throw std::logic_error("path coordinates: inconsistent system");
  for (std::size_t i = 0; i < sp.basis.size(); ++i) coords.at(i, 0) = x->at(i, 0);
  return coords;
}

std::size_t Algebra::dimension() const {
  std::size_t d = 0;
  for (const auto& sp : spaces_) d += sp.basis.size();
  return d;
}

bool Algebra::presentation_equal(const Algebra& o) const {
  if (!(quiver_ == o.quiver_) || field_ != o.field_ || relations_.size() != o.relations_.size())
    return false;
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    const auto& a = relations_[i].terms;
    const auto& b = o.relations_[i].terms;
    if (a.size() != b.size()) return false;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[j].coeff != b[j].coeff || a[j].arrows != b[j].arrows) return false;
  }
  return true;
}

std::shared_ptr<const Algebra> Algebra::opposite() const {
  std::lock_guard<std::mutex> lock(opposite_mutex);
  if (opposite_) return opposite_;
  Quiver q;
  q.vertex_count = quiver_.vertex_count;
  for (const auto& a : quiver_.arrows) q.arrows.push_back(Arrow{a.target, a.source, a.label});
  std::vector<Relation> rels;
  for (const auto& r : relations_) {
    Relation ro;
    for (const auto& t : r.terms) {
      RelationTerm to;
      to.coeff = t.coeff;
      to.arrows.assign(t.arrows.rbegin(), t.arrows.rend());
      ro.terms.push_back(std::move(to));
    }
    rels.push_back(std::move(ro));
  }
  auto op = Algebra::make(std::move(q), std::move(rels), field_, bound_);
  op->opposite_ = shared_from_this();
  opposite_ = op;
  return opposite_;
}

}  // namespace fibrant
