#include "rookfft/irreps.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <random>
#include <stdexcept>

namespace rookfft {

namespace {

using cd = std::complex<double>;

void store_row(ComplexMatrix& table, std::uint64_t g, const ComplexMatrix& m) {
  const Eigen::Index d = m.rows();
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) table(static_cast<Eigen::Index>(g), i * d + j) = m(i, j);
}

ComplexMatrix load_row(const ComplexMatrix& table, std::uint64_t g, int d) {
  ComplexMatrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = table(static_cast<Eigen::Index>(g), i * d + j);
  return m;
}

std::vector<std::uint8_t> compose_perm(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  std::vector<std::uint8_t> r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

std::vector<std::uint8_t> invert_perm(std::span<const std::uint8_t> a) {
  std::vector<std::uint8_t> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint8_t>(i);
  return r;
}

// Young's orthogonal form. Column t of ρ(s_i) holds diag at row t and off at
// row partner (partner == t when the swapped filling is not standard).
struct Generator {
  std::vector<double> diag, off;
  std::vector<int> partner;
};

struct YoungIrrep {
  Partition shape;
  int dim = 0;
  std::vector<Generator> gens;  // one per adjacent transposition s_0..s_{k-2}
};

YoungIrrep young_irrep(const Partition& shape, int k) {
  YoungIrrep y;
  y.shape = shape;
  const auto tableaux = standard_tableaux(shape);
  y.dim = static_cast<int>(tableaux.size());
  std::map<RowWord, int> position;
  for (int t = 0; t < y.dim; ++t) position[tableaux[t]] = t;

  std::vector<std::vector<int>> content(y.dim, std::vector<int>(k));
  for (int t = 0; t < y.dim; ++t) {
    std::vector<int> filled(shape.size(), 0);
    for (int e = 0; e < k; ++e) {
      const int row = tableaux[t][e];
      content[t][e] = filled[row]++ - row;
    }
  }
  for (int i = 0; i + 1 < k; ++i) {
    Generator g;
    g.diag.resize(y.dim);
    g.off.assign(y.dim, 0.0);
    g.partner.resize(y.dim);
    for (int t = 0; t < y.dim; ++t) {
      const int a = content[t][i + 1] - content[t][i];
      g.diag[t] = 1.0 / a;
      g.partner[t] = t;
      if (a != 1 && a != -1) {
        RowWord w = tableaux[t];
        std::swap(w[i], w[i + 1]);
        g.partner[t] = position.at(w);
        g.off[t] = std::sqrt(1.0 - 1.0 / (static_cast<double>(a) * a));
      }
    }
    y.gens.push_back(std::move(g));
  }
  return y;
}

// m ← m·ρ(s_i)
void apply_generator(ComplexMatrix& m, const Generator& g) {
  ComplexMatrix r(m.rows(), m.cols());
  for (Eigen::Index t = 0; t < m.cols(); ++t) {
    r.col(t) = m.col(t) * g.diag[t];
    if (g.partner[t] != t) r.col(t) += m.col(g.partner[t]) * g.off[t];
  }
  m.swap(r);
}

class YoungEvaluator final : public IrrepEvaluator {
 public:
  YoungEvaluator(int k, std::vector<YoungIrrep> irreps) : k_(k), irreps_(std::move(irreps)) {}

  void evaluate(std::uint64_t element, std::vector<ComplexMatrix>& out) const override {
    auto p = lehmer_unrank(element, k_);
    std::vector<int> word;
    for (;;) {
      int i = 0;
      while (i + 1 < k_ && p[i] < p[i + 1]) ++i;
      if (i + 1 >= k_) break;
      std::swap(p[i], p[i + 1]);
      word.push_back(i);
    }
    out.resize(irreps_.size());
    for (std::size_t r = 0; r < irreps_.size(); ++r) {
      out[r] = ComplexMatrix::Identity(irreps_[r].dim, irreps_[r].dim);
      for (auto it = word.rbegin(); it != word.rend(); ++it) apply_generator(out[r], irreps_[r].gens[*it]);
    }
  }

  // Steinhaus-Johnson-Trotter: consecutive permutations differ by one
  // adjacent position swap, i.e. a right factor s_j.
  void walk(std::uint64_t, const std::function<void(std::uint64_t, const std::vector<ComplexMatrix>&)>& visit)
      const override {
    std::vector<ComplexMatrix> mats(irreps_.size());
    for (std::size_t r = 0; r < irreps_.size(); ++r)
      mats[r] = ComplexMatrix::Identity(irreps_[r].dim, irreps_[r].dim);
    std::vector<std::uint8_t> perm(k_);
    std::vector<int> dir(k_, -1);
    for (int i = 0; i < k_; ++i) perm[i] = static_cast<std::uint8_t>(i);
    for (;;) {
      visit(lehmer_rank(perm), mats);
      int best = -1;
      for (int pos = 0; pos < k_; ++pos) {
        const int nb = pos + dir[perm[pos]];
        if (nb < 0 || nb >= k_ || perm[nb] > perm[pos]) continue;
        if (best < 0 || perm[pos] > perm[best]) best = pos;
      }
      if (best < 0) break;
      const int v = perm[best];
      const int nb = best + dir[v];
      std::swap(perm[best], perm[nb]);
      const int j = std::min(best, nb);
      for (std::size_t r = 0; r < irreps_.size(); ++r) apply_generator(mats[r], irreps_[r].gens[j]);
      for (int u = v + 1; u < k_; ++u) dir[u] = -dir[u];
    }
  }

  const std::vector<YoungIrrep>& irreps() const { return irreps_; }

 private:
  int k_;
  std::vector<YoungIrrep> irreps_;
};

IrrepSet build_symmetric(int k) {
  std::vector<YoungIrrep> young;
  std::vector<Irrep> irreps;
  for (const auto& shape : partitions(k)) {
    young.push_back(young_irrep(shape, k));
    irreps.push_back({partition_label(shape), young.back().dim});
  }
  const std::uint64_t order = factorial(k);
  auto eval = std::make_shared<YoungEvaluator>(k, young);
  IrrepSet lazy("S" + std::to_string(k), order, irreps, eval);
  if (order * order > kMaterializeLimit) return lazy;

  // Tables by induction on length: ρ(σ) = ρ(σ∘s_i)ρ(s_i) at a descent i.
  std::vector<ComplexMatrix> tables;
  for (const auto& ir : irreps) tables.emplace_back(static_cast<Eigen::Index>(order), ir.dim * ir.dim);
  std::vector<std::pair<int, std::uint64_t>> by_length;
  for (std::uint64_t id = 0; id < order; ++id) {
    const auto p = lehmer_unrank(id, k);
    int inv = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) inv += p[i] > p[j];
    by_length.emplace_back(inv, id);
  }
  std::sort(by_length.begin(), by_length.end());
  for (const auto& [len, id] : by_length) {
    for (std::size_t r = 0; r < irreps.size(); ++r) {
      const int d = irreps[r].dim;
      if (len == 0) {
        store_row(tables[r], id, ComplexMatrix::Identity(d, d));
        continue;
      }
      auto p = lehmer_unrank(id, k);
      int i = 0;
      while (p[i] < p[i + 1]) ++i;
      std::swap(p[i], p[i + 1]);
      ComplexMatrix m = load_row(tables[r], lehmer_rank(p), d);
      apply_generator(m, young[r].gens[i]);
      store_row(tables[r], id, m);
    }
  }
  return IrrepSet("S" + std::to_string(k), order, irreps, std::move(tables));
}

// One irrep of G≀S_k: a composition of k over the irreps of G, a partition
// of each part, and the data of the induced representation.
struct WreathPlan {
  std::vector<int> parts;                  // k_η
  std::vector<int> offsets;                // first position of block η
  std::vector<std::size_t> shape_index;    // partition of block η in symmetric_irreps(k_η)
  std::vector<int> type;                   // block of each position
  std::vector<int> base_dim;               // d_η over positions
  int dim_b = 1, dim_y = 1, block = 1;
  std::vector<std::vector<std::uint8_t>> cosets, cosets_inv;
  std::map<std::uint64_t, int> coset_of;   // key: block of u⁻¹(q) for q = 0..k-1
};

class WreathEvaluator final : public IrrepEvaluator {
 public:
  WreathEvaluator(int k, IrrepSet base, GroupPtr group, std::vector<WreathPlan> plans)
      : k_(k), base_(std::move(base)), group_(std::move(group)), plans_(std::move(plans)), w_(k, group_) {
    for (std::uint64_t g = 0; g < base_.group_order(); ++g) base_mats_.push_back(base_.matrices(g));
  }

  void evaluate(std::uint64_t element, std::vector<ComplexMatrix>& out) const override {
    const WreathElem e = w_.element(element);
    std::vector<std::uint8_t> sigma(k_);
    for (int p = 0; p < k_; ++p) sigma[p] = static_cast<std::uint8_t>(e.shape()(p));
    out.resize(plans_.size());
    for (std::size_t r = 0; r < plans_.size(); ++r) out[r] = evaluate_plan(plans_[r], sigma, e.labels());
  }

 private:
  std::uint64_t type_key(const WreathPlan& plan, std::span<const std::uint8_t> u_inv) const {
    std::uint64_t key = 0;
    for (int q = 0; q < k_; ++q) key = key * plan.parts.size() + static_cast<std::uint64_t>(plan.type[u_inv[q]]);
    return key;
  }

  ComplexMatrix evaluate_plan(const WreathPlan& plan, std::span<const std::uint8_t> sigma,
                              std::span<const Label> x) const {
    const int ncos = static_cast<int>(plan.cosets.size());
    ComplexMatrix m = ComplexMatrix::Zero(ncos * plan.block, ncos * plan.block);
    for (int j = 0; j < ncos; ++j) {
      const auto u = compose_perm(sigma, plan.cosets[j]);
      const int i = plan.coset_of.at(type_key(plan, invert_perm(u)));
      const auto pi = compose_perm(plan.cosets_inv[i], u);

      // B(y) with y_p = x_{τ_j(p)}, rows permuted by π.
      ComplexMatrix b = ComplexMatrix::Ones(1, 1);
      for (int p = 0; p < k_; ++p) {
        const auto& f = base_mats_[x[plan.cosets[j][p]]][plan.type[p]];
        ComplexMatrix next(b.rows() * f.rows(), b.cols() * f.cols());
        for (Eigen::Index a = 0; a < b.rows(); ++a)
          for (Eigen::Index c = 0; c < b.cols(); ++c)
            next.block(a * f.rows(), c * f.cols(), f.rows(), f.cols()) = b(a, c) * f;
        b.swap(next);
      }
      ComplexMatrix pb(plan.dim_b, plan.dim_b);
      std::vector<int> digits(k_);
      for (int row = 0; row < plan.dim_b; ++row) {
        int rem = row;
        for (int p = k_ - 1; p >= 0; --p) {
          digits[p] = rem % plan.base_dim[p];
          rem /= plan.base_dim[p];
        }
        std::vector<int> moved(k_);
        for (int p = 0; p < k_; ++p) moved[pi[p]] = digits[p];
        int target = 0;
        for (int p = 0; p < k_; ++p) target = target * plan.base_dim[p] + moved[p];
        pb.row(target) = b.row(row);
      }

      ComplexMatrix y = ComplexMatrix::Ones(1, 1);
      for (std::size_t eta = 0; eta < plan.parts.size(); ++eta) {
        const int ke = plan.parts[eta];
        if (ke == 0) continue;
        std::vector<std::uint8_t> local(ke);
        for (int t = 0; t < ke; ++t) local[t] = static_cast<std::uint8_t>(pi[plan.offsets[eta] + t] - plan.offsets[eta]);
        const ComplexMatrix f = symmetric_irreps(ke).matrix(plan.shape_index[eta], lehmer_rank(local));
        ComplexMatrix next(y.rows() * f.rows(), y.cols() * f.cols());
        for (Eigen::Index a = 0; a < y.rows(); ++a)
          for (Eigen::Index c = 0; c < y.cols(); ++c)
            next.block(a * f.rows(), c * f.cols(), f.rows(), f.cols()) = y(a, c) * f;
        y.swap(next);
      }

      auto blk = m.block(i * plan.block, j * plan.block, plan.block, plan.block);
      for (int a = 0; a < plan.dim_b; ++a)
        for (int c = 0; c < plan.dim_b; ++c)
          if (pb(a, c) != cd{}) blk.block(a * plan.dim_y, c * plan.dim_y, plan.dim_y, plan.dim_y) = pb(a, c) * y;
    }
    return m;
  }

  int k_;
  IrrepSet base_;
  GroupPtr group_;
  std::vector<WreathPlan> plans_;
  WreathGroup w_;
  std::vector<std::vector<ComplexMatrix>> base_mats_;
};

void compositions_rec(int remaining, std::size_t slots, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == slots) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int p = remaining; p >= 0; --p) {
    cur.push_back(p);
    compositions_rec(remaining - p, slots, cur, out);
    cur.pop_back();
  }
}

}  // namespace

void IrrepEvaluator::walk(std::uint64_t order,
                          const std::function<void(std::uint64_t, const std::vector<ComplexMatrix>&)>& visit) const {
  std::vector<ComplexMatrix> mats;
  for (std::uint64_t g = 0; g < order; ++g) {
    evaluate(g, mats);
    visit(g, mats);
  }
}

WreathGroup::WreathGroup(int k, GroupPtr base) : k_(k), index_(k, std::move(base), kMaxN) {}

std::string WreathGroup::descriptor() const {
  if (is_symmetric()) return "S" + std::to_string(k_);
  return base().descriptor() + "wrS" + std::to_string(k_);
}

std::uint64_t WreathGroup::mul(std::uint64_t a, std::uint64_t b) const {
  return id_of(wreath_compose(element(a), element(b)));
}

std::uint64_t WreathGroup::inv(std::uint64_t a) const { return id_of(wreath_inverse(element(a))); }

IrrepSet::IrrepSet(std::string descriptor, std::uint64_t order, std::vector<Irrep> irreps,
                   std::vector<ComplexMatrix> tables)
    : descriptor_(std::move(descriptor)), order_(order), irreps_(std::move(irreps)), tables_(std::move(tables)) {
  if (tables_.size() != irreps_.size()) throw std::invalid_argument("one table per irrep is required");
  for (std::size_t r = 0; r < irreps_.size(); ++r) {
    const auto d = static_cast<Eigen::Index>(irreps_[r].dim);
    if (tables_[r].rows() != static_cast<Eigen::Index>(order_) || tables_[r].cols() != d * d)
      throw DimensionError("irrep table " + irreps_[r].label + " has the wrong shape");
  }
}

IrrepSet::IrrepSet(std::string descriptor, std::uint64_t order, std::vector<Irrep> irreps,
                   std::shared_ptr<const IrrepEvaluator> evaluator)
    : descriptor_(std::move(descriptor)), order_(order), irreps_(std::move(irreps)), evaluator_(std::move(evaluator)) {}

ComplexMatrix IrrepSet::matrix(std::size_t r, std::uint64_t element) const {
  if (element >= order_) throw std::out_of_range("group element out of range");
  if (materialized()) return load_row(tables_.at(r), element, dim(r));
  std::vector<ComplexMatrix> all;
  evaluator_->evaluate(element, all);
  return all.at(r);
}

std::vector<ComplexMatrix> IrrepSet::matrices(std::uint64_t element) const {
  if (element >= order_) throw std::out_of_range("group element out of range");
  std::vector<ComplexMatrix> all;
  if (materialized()) {
    for (std::size_t r = 0; r < size(); ++r) all.push_back(load_row(tables_[r], element, dim(r)));
  } else {
    evaluator_->evaluate(element, all);
  }
  return all;
}

void IrrepSet::for_each_element(
    const std::function<void(std::uint64_t, const std::vector<ComplexMatrix>&)>& visit) const {
  if (!materialized()) {
    evaluator_->walk(order_, visit);
    return;
  }
  for (std::uint64_t g = 0; g < order_; ++g) visit(g, matrices(g));
}

IrrepSet IrrepSet::materialize() const {
  if (materialized()) return *this;
  std::vector<ComplexMatrix> tables;
  for (const auto& ir : irreps_) tables.emplace_back(static_cast<Eigen::Index>(order_), ir.dim * ir.dim);
  for_each_element([&](std::uint64_t g, const std::vector<ComplexMatrix>& mats) {
    for (std::size_t r = 0; r < mats.size(); ++r) store_row(tables[r], g, mats[r]);
  });
  return IrrepSet(descriptor_, order_, irreps_, std::move(tables));
}

const IrrepSet& symmetric_irreps(int k) {
  if (k < 0 || k > 8) throw std::out_of_range("symmetric_irreps supports 0 <= k <= 8, got " + std::to_string(k));
  static std::array<std::unique_ptr<IrrepSet>, 9> cache;
  static std::mutex lock;
  std::lock_guard guard(lock);
  if (!cache[k]) cache[k] = std::make_unique<IrrepSet>(build_symmetric(k));
  return *cache[k];
}

IrrepSet cyclic_irreps(const GroupTable& zm) {
  const int m = zm.order();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (zm.mul(a, b) != (a + b) % m) throw std::invalid_argument(zm.descriptor() + " is not Z_m in additive numbering");
  std::vector<Irrep> irreps;
  std::vector<ComplexMatrix> tables;
  for (int j = 0; j < m; ++j) {
    irreps.push_back({"chi" + std::to_string(j), 1});
    ComplexMatrix t(m, 1);
    for (int x = 0; x < m; ++x) t(x, 0) = std::polar(1.0, 2.0 * std::numbers::pi * j * x / m);
    tables.push_back(std::move(t));
  }
  return IrrepSet(zm.descriptor(), static_cast<std::uint64_t>(m), std::move(irreps), std::move(tables));
}

IrrepSet wreath_irreps(const IrrepSet& base_irreps, const GroupPtr& base, int k) {
  if (!base) throw std::invalid_argument("wreath_irreps needs a base group");
  if (base_irreps.group_order() != static_cast<std::uint64_t>(base->order()))
    throw DimensionError("base irreps do not match the base group order");
  if (k < 0 || k > 8) throw std::out_of_range("wreath_irreps supports 0 <= k <= 8");
  WreathGroup w(k, base);
  const std::uint64_t order = w.order();
  if (order > 1'000'000) throw std::length_error(w.descriptor() + " has more than 10^6 elements");

  const std::size_t h = base_irreps.size();
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  compositions_rec(k, h, cur, comps);

  std::vector<WreathPlan> plans;
  std::vector<Irrep> irreps;
  std::uint64_t sum_sq = 0;
  for (const auto& parts : comps) {
    // Cartesian product of partitions, first block most significant.
    std::vector<std::vector<Partition>> options;
    for (int ke : parts) options.push_back(partitions(ke));
    std::vector<std::size_t> pick(h, 0);
    for (;;) {
      WreathPlan plan;
      plan.parts = parts;
      plan.shape_index = pick;
      int off = 0;
      for (std::size_t eta = 0; eta < h; ++eta) {
        plan.offsets.push_back(off);
        for (int t = 0; t < parts[eta]; ++t) {
          plan.type.push_back(static_cast<int>(eta));
          plan.base_dim.push_back(base_irreps.dim(eta));
          plan.dim_b *= base_irreps.dim(eta);
        }
        off += parts[eta];
        if (parts[eta] > 0) plan.dim_y *= symmetric_irreps(parts[eta]).dim(pick[eta]);
      }
      plan.block = plan.dim_b * plan.dim_y;
      for (std::uint64_t id = 0; id < factorial(k); ++id) {
        auto tau = lehmer_unrank(id, k);
        bool increasing = true;
        for (int p = 0; p + 1 < k; ++p)
          if (plan.type[p] == plan.type[p + 1] && tau[p] > tau[p + 1]) increasing = false;
        if (!increasing) continue;
        const auto tau_inv = invert_perm(tau);
        std::uint64_t key = 0;
        for (int q = 0; q < k; ++q) key = key * h + static_cast<std::uint64_t>(plan.type[tau_inv[q]]);
        plan.coset_of[key] = static_cast<int>(plan.cosets.size());
        plan.cosets.push_back(tau);
        plan.cosets_inv.push_back(tau_inv);
      }
      const int dim = static_cast<int>(plan.cosets.size()) * plan.block;
      sum_sq += static_cast<std::uint64_t>(dim) * static_cast<std::uint64_t>(dim);

      std::string label;
      if (h == 1) {
        label = partition_label(options[0][pick[0]]);
      } else {
        label = "(";
        for (std::size_t eta = 0; eta < h; ++eta) {
          if (eta) label += ",";
          label += partition_label(options[eta][pick[eta]]);
        }
        label += ")";
      }
      irreps.push_back({label, dim});
      plans.push_back(std::move(plan));

      std::size_t pos = h;
      while (pos > 0) {
        --pos;
        if (++pick[pos] < options[pos].size()) break;
        pick[pos] = 0;
        if (pos == 0) pos = h;
        if (pos == h) break;
      }
      if (pos == h) break;
    }
  }
  if (sum_sq != order)
    throw std::runtime_error("irreps of " + w.descriptor() + " are incomplete: sum of squared dimensions " +
                             std::to_string(sum_sq) + " != " + std::to_string(order));

  auto eval = std::make_shared<WreathEvaluator>(k, base_irreps, base, std::move(plans));
  IrrepSet lazy(w.descriptor(), order, std::move(irreps), eval);
  if (order * order > kMaterializeLimit) return lazy;
  return lazy.materialize();
}

IrrepSet subgroup_irreps(const IrrepSet* base_irreps, const GroupPtr& base, int k) {
  if (!base || base->order() == 1) return symmetric_irreps(k);
  if (!base_irreps) throw std::invalid_argument("irreps of " + base->descriptor() + " are required");
  return wreath_irreps(*base_irreps, base, k);
}

bool IrrepReport::passed(double tol) const {
  return homomorphism_error <= tol && unitarity_error <= tol && identity_error <= tol &&
         sum_of_squares == group_order && max_character_norm_error <= 1e-8 && min_character_gap > 1e-6;
}

IrrepReport check_irreps(const IrrepSet& irreps, const WreathGroup& group, bool exhaustive) {
  if (irreps.group_order() != group.order()) throw DimensionError("irreps and group have different orders");
  IrrepReport rep;
  const std::uint64_t order = group.order();
  rep.group_order = order;
  for (const auto& ir : irreps.irreps()) rep.sum_of_squares += static_cast<std::uint64_t>(ir.dim) * ir.dim;
  const std::size_t h = irreps.size();

  Eigen::MatrixXcd chars(static_cast<Eigen::Index>(order), static_cast<Eigen::Index>(h));
  irreps.for_each_element([&](std::uint64_t g, const std::vector<ComplexMatrix>& mats) {
    for (std::size_t r = 0; r < h; ++r) {
      chars(static_cast<Eigen::Index>(g), static_cast<Eigen::Index>(r)) = mats[r].trace();
      const auto d = mats[r].rows();
      const double u = (mats[r] * mats[r].adjoint() - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
      rep.unitarity_error = std::max(rep.unitarity_error, u);
      if (g == group.identity())
        rep.identity_error =
            std::max(rep.identity_error, (mats[r] - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff());
    }
  });

  const auto check_pair = [&](const std::vector<ComplexMatrix>& ma, const std::vector<ComplexMatrix>& mb,
                              std::uint64_t ab) {
    const auto mab = irreps.matrices(ab);
    for (std::size_t r = 0; r < h; ++r)
      rep.homomorphism_error = std::max(rep.homomorphism_error, (ma[r] * mb[r] - mab[r]).cwiseAbs().maxCoeff());
  };
  if (exhaustive) {
    std::vector<std::vector<ComplexMatrix>> all(order);
    for (std::uint64_t g = 0; g < order; ++g) all[g] = irreps.matrices(g);
    for (std::uint64_t a = 0; a < order; ++a)
      for (std::uint64_t b = 0; b < order; ++b) {
        const std::uint64_t ab = group.mul(a, b);
        for (std::size_t r = 0; r < h; ++r)
          rep.homomorphism_error =
              std::max(rep.homomorphism_error, (all[a][r] * all[b][r] - all[ab][r]).cwiseAbs().maxCoeff());
      }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::uint64_t> pick(0, order - 1);
    for (int s = 0; s < 2000; ++s) {
      const std::uint64_t a = pick(rng), b = pick(rng);
      check_pair(irreps.matrices(a), irreps.matrices(b), group.mul(a, b));
    }
  }

  rep.min_character_gap = h > 1 ? INFINITY : 1.0;
  for (std::size_t r = 0; r < h; ++r) {
    const double norm = chars.col(static_cast<Eigen::Index>(r)).squaredNorm() / static_cast<double>(order);
    rep.max_character_norm_error = std::max(rep.max_character_norm_error, std::abs(norm - 1.0));
    for (std::size_t s = r + 1; s < h; ++s) {
      const double gap =
          (chars.col(static_cast<Eigen::Index>(r)) - chars.col(static_cast<Eigen::Index>(s))).cwiseAbs().maxCoeff();
      rep.min_character_gap = std::min(rep.min_character_gap, gap);
    }
  }
  return rep;
}

GroupSpectrum group_ft(const Eigen::VectorXcd& f, const IrrepSet& irreps) {
  if (static_cast<std::uint64_t>(f.size()) != irreps.group_order())
    throw DimensionError("function length does not match the group order");
  const auto flat = group_ft_batch(f.transpose(), irreps);
  GroupSpectrum out;
  for (std::size_t r = 0; r < irreps.size(); ++r) {
    const int d = irreps.dim(r);
    ComplexMatrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = flat[r](0, i * d + j);
    out.push_back(std::move(m));
  }
  return out;
}

Eigen::VectorXcd group_ift(const GroupSpectrum& spectrum, const IrrepSet& irreps) {
  if (spectrum.size() != irreps.size()) throw DimensionError("spectrum has the wrong number of blocks");
  std::vector<ComplexMatrix> flat;
  for (std::size_t r = 0; r < irreps.size(); ++r) {
    const int d = irreps.dim(r);
    if (spectrum[r].rows() != d || spectrum[r].cols() != d)
      throw DimensionError("spectrum block " + irreps.irreps()[r].label + " has the wrong shape");
    ComplexMatrix row(1, d * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) row(0, i * d + j) = spectrum[r](i, j);
    flat.push_back(std::move(row));
  }
  return group_ift_batch(flat, irreps).row(0).transpose();
}

std::vector<ComplexMatrix> group_ft_batch(const ComplexMatrix& functions, const IrrepSet& irreps) {
  if (static_cast<std::uint64_t>(functions.cols()) != irreps.group_order())
    throw DimensionError("function length does not match the group order");
  std::vector<ComplexMatrix> out;
  if (irreps.materialized()) {
    for (std::size_t r = 0; r < irreps.size(); ++r) out.push_back(functions * irreps.table(r));
    return out;
  }
  for (std::size_t r = 0; r < irreps.size(); ++r)
    out.push_back(ComplexMatrix::Zero(functions.rows(), irreps.dim(r) * irreps.dim(r)));
  irreps.for_each_element([&](std::uint64_t g, const std::vector<ComplexMatrix>& mats) {
    const auto col = functions.col(static_cast<Eigen::Index>(g));
    for (std::size_t r = 0; r < mats.size(); ++r) {
      const auto d = mats[r].rows();
      for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) out[r].col(i * d + j) += col * mats[r](i, j);
    }
  });
  return out;
}

ComplexMatrix group_ift_batch(const std::vector<ComplexMatrix>& spectra, const IrrepSet& irreps) {
  if (spectra.size() != irreps.size()) throw DimensionError("spectrum has the wrong number of blocks");
  const Eigen::Index rows = spectra.empty() ? 0 : spectra[0].rows();
  for (std::size_t r = 0; r < irreps.size(); ++r)
    if (spectra[r].rows() != rows || spectra[r].cols() != irreps.dim(r) * irreps.dim(r))
      throw DimensionError("spectrum block " + irreps.irreps()[r].label + " has the wrong shape");
  const double order = static_cast<double>(irreps.group_order());
  ComplexMatrix out = ComplexMatrix::Zero(rows, static_cast<Eigen::Index>(irreps.group_order()));
  if (irreps.materialized()) {
    for (std::size_t r = 0; r < irreps.size(); ++r)
      out.noalias() += (irreps.dim(r) / order) * (spectra[r] * irreps.table(r).adjoint());
    return out;
  }
  irreps.for_each_element([&](std::uint64_t g, const std::vector<ComplexMatrix>& mats) {
    auto col = out.col(static_cast<Eigen::Index>(g));
    for (std::size_t r = 0; r < mats.size(); ++r) {
      const auto d = mats[r].rows();
      const double w = static_cast<double>(d) / order;
      for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) col += spectra[r].col(i * d + j) * (w * std::conj(mats[r](i, j)));
    }
  });
  return out;
}

std::uint64_t naive_group_ft_cost(const IrrepSet& irreps) {
  std::uint64_t c = 0;
  for (const auto& ir : irreps.irreps())
    c = checked_add(c, checked_mul(irreps.group_order(), static_cast<std::uint64_t>(ir.dim) * ir.dim));
  return c;
}

}  // namespace rookfft
