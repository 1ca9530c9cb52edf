#include "fibrant/module.hpp"

#include <atomic>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace fibrant {

namespace {

std::atomic<std::uint64_t> next_module_id{1};

}  // namespace

Module::Module(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps)
    : algebra_(std::move(algebra)),
      dims_(std::move(dims)),
      arrow_maps_(std::move(arrow_maps)),
      id_(next_module_id.fetch_add(1)) {
  const Quiver& q = algebra_->quiver();
  if (dims_.size() != q.vertex_count) throw invalid_module("dimension vector length");
  if (arrow_maps_.size() != q.arrows.size()) throw invalid_module("arrow map count");
  for (std::size_t i = 0; i < q.arrows.size(); ++i) {
    const Arrow& a = q.arrows[i];
    if (arrow_maps_[i].rows() != dims_[a.target] || arrow_maps_[i].cols() != dims_[a.source])
      throw invalid_module("arrow map shape for '" + a.label + "'");
  }
  for (const auto& r : algebra_->relations()) {
    std::size_t src = q.arrows[r.terms.front().arrows.front()].source;
    std::size_t tgt = q.arrows[r.terms.front().arrows.back()].target;
    Matrix acc(dims_[tgt], dims_[src], algebra_->field());
    for (const auto& t : r.terms) {
      Matrix prod = Matrix::identity(dims_[src], algebra_->field());
      for (std::size_t ai : t.arrows) prod = arrow_maps_[ai] * prod;
      acc = acc + prod.scaled(Scalar(t.coeff, algebra_->field()));
    }
    if (!acc.is_zero()) {
      std::string word;
      for (std::size_t ai : r.terms.front().arrows) {
        if (!word.empty()) word += ".";
        word += q.arrows[ai].label;
      }
      throw invalid_module("relation '" + word + "' not satisfied by representation");
    }
  }

  std::uint64_t h = 1469598103934665603ull;  // FNV-1a over the content
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(reinterpret_cast<std::uintptr_t>(algebra_.get()));
  for (std::size_t d : dims_) mix(d + 1);
  std::hash<std::string> sh;
  for (const auto& m : arrow_maps_)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) mix(sh(m.at(r, c).str()));
  content_hash_ = h;
}

std::size_t Module::total_dim() const {
  std::size_t d = 0;
  for (std::size_t v : dims_) d += v;
  return d;
}

bool Module::structurally_equal(const Module& o) const {
  return algebra_.get() == o.algebra_.get() && dims_ == o.dims_ && arrow_maps_ == o.arrow_maps_;
}

Matrix Module::path_action(const Path& p) const {
  Matrix m = Matrix::identity(dims_[p.source], algebra_->field());
  for (std::size_t ai : p.arrows) m = arrow_maps_[ai] * m;
  return m;
}

Module zero_module(const AlgebraPtr& a) {
  std::vector<std::size_t> dims(a->quiver().vertex_count, 0);
  std::vector<Matrix> maps;
  for (const auto& _ : a->quiver().arrows) {
    (void)_;
    maps.push_back(Matrix(0, 0, a->field()));
  }
  return Module(a, std::move(dims), std::move(maps));
}

Morphism::Morphism(Module source, Module target, std::vector<Matrix> vertex_maps)
    : source_(std::move(source)), target_(std::move(target)), vertex_maps_(std::move(vertex_maps)) {
  if (source_.algebra().get() != target_.algebra().get()) throw algebra_mismatch{};
  const Quiver& q = source_.algebra()->quiver();
  if (vertex_maps_.size() != q.vertex_count) throw invalid_module("vertex map count");
  for (std::size_t v = 0; v < q.vertex_count; ++v)
    if (vertex_maps_[v].rows() != target_.dims()[v] || vertex_maps_[v].cols() != source_.dims()[v])
      throw invalid_module("vertex map shape");
  for (std::size_t i = 0; i < q.arrows.size(); ++i) {
    const Arrow& a = q.arrows[i];
    Matrix lhs = target_.arrow_map(i) * vertex_maps_[a.source];
    Matrix rhs = vertex_maps_[a.target] * source_.arrow_map(i);
    if (!(lhs == rhs)) throw invalid_module("vertex maps do not intertwine arrow '" + a.label + "'");
  }
}

bool Morphism::is_zero_map() const {
  for (const auto& m : vertex_maps_)
    if (!m.is_zero()) return false;
  return true;
}

bool Morphism::structurally_equal(const Morphism& o) const {
  return source_.structurally_equal(o.source_) && target_.structurally_equal(o.target_) &&
         vertex_maps_ == o.vertex_maps_;
}

Matrix Morphism::vectorize() const {
  Matrix v(0, 1, source_.algebra()->field());
  for (const auto& m : vertex_maps_) v = Matrix::vconcat(v, m.vectorize());
  return v;
}

Morphism identity_morphism(const Module& m) {
  std::vector<Matrix> maps;
  for (std::size_t d : m.dims()) maps.push_back(Matrix::identity(d, m.algebra()->field()));
  return Morphism(m, m, std::move(maps));
}

Morphism zero_morphism(const Module& source, const Module& target) {
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < source.dims().size(); ++v)
    maps.push_back(Matrix(target.dims()[v], source.dims()[v], source.algebra()->field()));
  return Morphism(source, target, std::move(maps));
}

Morphism compose(const Morphism& g, const Morphism& f) {
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < f.vertex_maps().size(); ++v)
    maps.push_back(g.vertex_map(v) * f.vertex_map(v));
  return Morphism(f.source(), g.target(), std::move(maps));
}

Morphism add(const Morphism& a, const Morphism& b) {
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < a.vertex_maps().size(); ++v)
    maps.push_back(a.vertex_map(v) + b.vertex_map(v));
  return Morphism(a.source(), a.target(), std::move(maps));
}

Morphism scale(const Scalar& s, const Morphism& f) {
  std::vector<Matrix> maps;
  for (const auto& m : f.vertex_maps()) maps.push_back(m.scaled(s));
  return Morphism(f.source(), f.target(), std::move(maps));
}

bool is_mono(const Morphism& f) {
  for (const auto& m : f.vertex_maps())
    if (rank(m) != m.cols()) return false;
  return true;
}

bool is_epi(const Morphism& f) {
  for (const auto& m : f.vertex_maps())
    if (rank(m) != m.rows()) return false;
  return true;
}

bool is_iso(const Morphism& f) { return is_mono(f) && is_epi(f); }

namespace {

// Hom bases are requested over and over by the class deciders, usually
// for freshly assembled direct sums; caching by content makes structurally
// equal rebuilds hit. Entries keep the modules for collision checks.
class HomCache {
 public:
  static HomCache& instance() {
    static HomCache c;
    return c;
  }

  const std::vector<Morphism>* find(const Module& a, const Module& b) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto range = cache_.equal_range(key(a, b));
    for (auto it = range.first; it != range.second; ++it) {
      if (it->second.a.structurally_equal(a) && it->second.b.structurally_equal(b)) {
        return &it->second.basis;
      }
    }
    return nullptr;
  }

  const std::vector<Morphism>& store(const Module& a, const Module& b,
                                     std::vector<Morphism> v) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.emplace(key(a, b), Entry{a, b, std::move(v)});
    return it->second.basis;
  }

 private:
  struct Entry {
    Module a;
    Module b;
    std::vector<Morphism> basis;
  };
  static std::uint64_t key(const Module& a, const Module& b) {
    return a.content_hash() * 1000003u + b.content_hash();
  }
  std::mutex mutex_;
  std::unordered_multimap<std::uint64_t, Entry> cache_;
};

std::vector<Morphism> compute_hom_basis(const Module& m, const Module& n) {
  if (m.algebra().get() != n.algebra().get()) throw algebra_mismatch{};
  const AlgebraPtr& alg = m.algebra();
  const Quiver& q = alg->quiver();
  const Field f = alg->field();

  // unknowns: entries of f_v, stacked row-major per vertex
  std::vector<std::size_t> offsets(q.vertex_count + 1, 0);
  for (std::size_t v = 0; v < q.vertex_count; ++v)
    offsets[v + 1] = offsets[v] + n.dims()[v] * m.dims()[v];
  std::size_t unknowns = offsets.back();

  // one equation block per arrow: N_a f_v - f_w M_a = 0
  std::vector<std::vector<Scalar>> rows;
  auto var = [&](std::size_t v, std::size_t r, std::size_t c) {
    return offsets[v] + r * m.dims()[v] + c;
  };
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    const Arrow& a = q.arrows[ai];
    const Matrix& ma = m.arrow_map(ai);
    const Matrix& na = n.arrow_map(ai);
    for (std::size_t r = 0; r < n.dims()[a.target]; ++r) {
      for (std::size_t c = 0; c < m.dims()[a.source]; ++c) {
        std::vector<Scalar> row(unknowns, zero_of(f));
        for (std::size_t k = 0; k < n.dims()[a.source]; ++k)
          row[var(a.source, k, c)] += na.at(r, k);
        for (std::size_t k = 0; k < m.dims()[a.target]; ++k)
          row[var(a.target, r, k)] -= ma.at(k, c);
        rows.push_back(std::move(row));
      }
    }
  }

  Matrix system(rows.size(), unknowns, f);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < unknowns; ++j) system.at(i, j) = rows[i][j];

  Matrix basis = kernel_basis(system);
  std::vector<Morphism> result;
  for (std::size_t b = 0; b < basis.cols(); ++b) {
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < q.vertex_count; ++v) {
      Matrix mv(n.dims()[v], m.dims()[v], f);
      for (std::size_t r = 0; r < n.dims()[v]; ++r)
        for (std::size_t c = 0; c < m.dims()[v]; ++c) mv.at(r, c) = basis.at(var(v, r, c), b);
      maps.push_back(std::move(mv));
    }
    result.emplace_back(m, n, std::move(maps));
  }
  return result;
}

}  // namespace

std::vector<Morphism> hom_basis(const Module& m, const Module& n) {
  auto& cache = HomCache::instance();
  if (const auto* hit = cache.find(m, n)) return *hit;
  return cache.store(m, n, compute_hom_basis(m, n));
}

std::size_t hom_dim(const Module& m, const Module& n) { return hom_basis(m, n).size(); }

Morphism hom_from_coords(const Module& m, const Module& n, const Matrix& coords) {
  auto basis = hom_basis(m, n);
  if (coords.rows() != basis.size() || coords.cols() != 1)
    throw dimension_mismatch("hom_from_coords");
  Morphism r = zero_morphism(m, n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coords.at(i, 0).is_zero()) r = add(r, scale(coords.at(i, 0), basis[i]));
  return r;
}

Matrix hom_coords(const Morphism& f) {
  auto basis = hom_basis(f.source(), f.target());
  Matrix b(f.vectorize().rows(), basis.size(), f.source().algebra()->field());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Matrix col = basis[j].vectorize();
    for (std::size_t i = 0; i < col.rows(); ++i) b.at(i, j) = col.at(i, 0);
  }
  auto x = solve(b, f.vectorize());
  if (!x) throw std::logic_error("morphism outside its own hom space");
  return *x;
}

SubquotientPair kernel(const Morphism& f) {
  const AlgebraPtr& alg = f.source().algebra();
  const Quiver& q = alg->quiver();
  std::vector<Matrix> incl;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.vertex_count; ++v) {
    incl.push_back(kernel_basis(f.vertex_map(v)));
    dims.push_back(incl.back().cols());
  }
  std::vector<Matrix> maps;
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    const Arrow& a = q.arrows[ai];
    // the source arrow map restricts to the kernel
    auto x = solve(incl[a.target], f.source().arrow_map(ai) * incl[a.source]);
    if (!x) throw std::logic_error("kernel is not arrow-stable");
    maps.push_back(std::move(*x));
  }
  Module k(alg, std::move(dims), std::move(maps));
  Morphism iota(k, f.source(), std::move(incl));
  return {std::move(k), std::move(iota)};
}

SubquotientPair cokernel(const Morphism& f) {
  const AlgebraPtr& alg = f.source().algebra();
  const Quiver& q = alg->quiver();
  std::vector<Matrix> proj;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < q.vertex_count; ++v) {
    // rows spanning the left null space of f_v give the quotient projection
    proj.push_back(kernel_basis(f.vertex_map(v).transpose()).transpose());
    dims.push_back(proj.back().rows());
  }
  std::vector<Matrix> maps;
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    const Arrow& a = q.arrows[ai];
    // induced map C_a with C_a * proj_src = proj_tgt * N_a
    Matrix rhs = proj[a.target] * f.target().arrow_map(ai);
    auto xt = solve(proj[a.source].transpose(), rhs.transpose());
    if (!xt) throw std::logic_error("cokernel arrow map inconsistent");
    maps.push_back(xt->transpose());
  }
  Module c(alg, std::move(dims), std::move(maps));
  Morphism pi(f.target(), c, std::move(proj));
  return {std::move(c), std::move(pi)};
}

DirectSum direct_sum(const std::vector<Module>& parts, const AlgebraPtr& algebra) {
  for (const auto& p : parts)
    if (p.algebra().get() != algebra.get()) throw algebra_mismatch{};
  const Quiver& q = algebra->quiver();
  const Field f = algebra->field();
  std::vector<std::size_t> dims(q.vertex_count, 0);
  for (const auto& p : parts)
    for (std::size_t v = 0; v < q.vertex_count; ++v) dims[v] += p.dims()[v];
  std::vector<Matrix> maps;
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    const Arrow& a = q.arrows[ai];
    Matrix block(dims[a.target], dims[a.source], f);
    std::size_t ro = 0, co = 0;
    for (const auto& p : parts) {
      const Matrix& pm = p.arrow_map(ai);
      for (std::size_t r = 0; r < pm.rows(); ++r)
        for (std::size_t c = 0; c < pm.cols(); ++c) block.at(ro + r, co + c) = pm.at(r, c);
      ro += pm.rows();
      co += pm.cols();
    }
    maps.push_back(std::move(block));
  }
  Module sum(algebra, dims, std::move(maps));

  DirectSum out{sum, {}, {}};
  std::vector<std::size_t> offset(q.vertex_count, 0);
  for (const auto& p : parts) {
    std::vector<Matrix> inj, prj;
    for (std::size_t v = 0; v < q.vertex_count; ++v) {
      Matrix in(dims[v], p.dims()[v], f);
      Matrix pr(p.dims()[v], dims[v], f);
      for (std::size_t i = 0; i < p.dims()[v]; ++i) {
        in.at(offset[v] + i, i) = one_of(f);
        pr.at(i, offset[v] + i) = one_of(f);
      }
      inj.push_back(std::move(in));
      prj.push_back(std::move(pr));
    }
    out.injections.emplace_back(p, sum, std::move(inj));
    out.projections.emplace_back(sum, p, std::move(prj));
    for (std::size_t v = 0; v < q.vertex_count; ++v) offset[v] += p.dims()[v];
  }
  return out;
}

Morphism row_morphism(const std::vector<Morphism>& components, const Module& domain_sum) {
  if (components.empty()) throw std::logic_error("row_morphism needs components");
  const Module& target = components.front().target();
  Morphism r = zero_morphism(domain_sum, target);
  std::vector<Module> sources;
  for (const auto& c : components) sources.push_back(c.source());
  DirectSum ds = direct_sum(sources, domain_sum.algebra());
  if (!(ds.sum.structurally_equal(domain_sum))) throw dimension_mismatch("row_morphism domain");
  for (std::size_t i = 0; i < components.size(); ++i) {
    Morphism proj(domain_sum, components[i].source(), ds.projections[i].vertex_maps());
    r = add(r, compose(components[i], proj));
  }
  return r;
}

Morphism column_morphism(const std::vector<Morphism>& components, const Module& codomain_sum) {
  if (components.empty()) throw std::logic_error("column_morphism needs components");
  Morphism r = zero_morphism(components.front().source(), codomain_sum);
  std::vector<Module> targets;
  for (const auto& c : components) targets.push_back(c.target());
  DirectSum ds = direct_sum(targets, codomain_sum.algebra());
  if (!(ds.sum.structurally_equal(codomain_sum))) throw dimension_mismatch("column_morphism codomain");
  for (std::size_t i = 0; i < components.size(); ++i) {
    Morphism inj(components[i].target(), codomain_sum, ds.injections[i].vertex_maps());
    r = add(r, compose(inj, components[i]));
  }
  return r;
}

Module dualize(const Module& m) {
  AlgebraPtr op = m.algebra()->opposite();
  std::vector<Matrix> maps;
  for (const auto& a : m.arrow_maps()) maps.push_back(a.transpose());
  return Module(op, m.dims(), std::move(maps));
}

Morphism dualize(const Morphism& f) {
  Module ds = dualize(f.target());
  Module dt = dualize(f.source());
  std::vector<Matrix> maps;
  for (const auto& v : f.vertex_maps()) maps.push_back(v.transpose());
  return Morphism(std::move(ds), std::move(dt), std::move(maps));
}

bool is_isomorphic(const Module& m, const Module& n) {
  if (m.dims() != n.dims()) return false;
  if (m.total_dim() == 0) return true;
  auto basis = hom_basis(m, n);
  for (const auto& f : basis)
    if (is_iso(f)) return true;
  // deterministic combinations with small integer weights
  const Field fld = m.algebra()->field();
  for (int seedw = 1; seedw <= 20; ++seedw) {
    Morphism f = zero_morphism(m, n);
    std::int64_t w = 1;
    for (const auto& b : basis) {
      f = add(f, scale(Scalar(w, fld), b));
      w = (w * (seedw + 2) + 1) % 97;
    }
    if (is_iso(f)) return true;
  }
  return false;
}

std::string describe(const Module& m) {
  std::ostringstream os;
  os << "dims=(";
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    os << m.dims()[v];
    if (v + 1 < m.dims().size()) os << ",";
  }
  os << ")";
  for (std::size_t a = 0; a < m.arrow_maps().size(); ++a)
    os << " " << m.algebra()->quiver().arrows[a].label << "=" << to_string(m.arrow_map(a));
  return os.str();
}

std::string describe(const Morphism& f) {
  std::ostringstream os;
  os << "source{" << describe(f.source()) << "} target{" << describe(f.target()) << "} maps:";
  for (const auto& v : f.vertex_maps()) os << " " << to_string(v);
  return os.str();
}

}  // namespace fibrant
