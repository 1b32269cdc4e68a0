#include "fst/induce.hpp"

#include <cmath>

namespace fst {

std::shared_ptr<const GroupSystem> GroupSystem::make(FiniteGroup g,
                                                     const std::vector<int>& generators) {
    Subgroup k = subgroup_closure(g, generators);
    return make(std::move(g), std::move(k));
}

std::shared_ptr<const GroupSystem> GroupSystem::make(FiniteGroup g, Subgroup k) {
    auto sys = std::make_shared<GroupSystem>();
    sys->cosets = coset_decompose(g, k);
    sys->weights = haar_weights(g, k);
    sys->group = std::move(g);
    sys->sub = std::move(k);
    return sys;
}

InducedRep::InducedRep(std::shared_ptr<const GroupSystem> system, UnitaryRep sigma,
                       std::string label)
    : system_(std::move(system)),
      sigma_(std::move(sigma)),
      label_(std::move(label)),
      opcache_(std::make_shared<OpCache>()) {
    const auto& g = system_->group;
    const auto& cs = system_->cosets;
    const int n = cs.index(), d = sigma_.dim;
    dim_ = n * d;
    source_irreducible_ = is_irreducible(sigma_);

    // theta_{(r,s)}(g) = [g in g_r K] sigma((g_r^-1 g)^-1) xi_s
    basis_.assign(dim_, EquivariantFunction{});
    for (int i = 0; i < dim_; ++i) {
        basis_[i].dim = d;
        basis_[i].values.assign(g.order, Eigen::VectorXcd::Zero(d));
    }
    for (int r = 0; r < n; ++r) {
        const int gr = cs.reps[r];
        for (int kk : system_->sub.members) {
            const int x = g.mul(gr, kk);
            const Eigen::MatrixXcd& m = sigma_.mat(g.inv(kk));
            for (int s = 0; s < d; ++s) basis_[r * d + s].values[x] = m.col(s);
        }
    }
}

Eigen::MatrixXcd InducedRep::build_operator(int t) const {
    const auto& g = system_->group;
    const auto& cs = system_->cosets;
    const int n = cs.index(), d = sigma_.dim;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim_, dim_);
    const int ti = g.inv(t);
    for (int rp = 0; rp < n; ++rp) {
        const int x = g.mul(ti, cs.reps[rp]);
        const auto [rho, kk] = cs.factor[x];
        m.block(rp * d, rho * d, d, d) = sigma_.mat(g.inv(kk));
    }
    return m;
}

const Eigen::MatrixXcd& InducedRep::operator_at(int t) const {
    std::lock_guard<std::mutex> lock(opcache_->mutex);
    auto it = opcache_->map.find(t);
    if (it == opcache_->map.end()) it = opcache_->map.emplace(t, build_operator(t)).first;
    return it->second;
}

std::complex<double> InducedRep::character_at(int t) const { return operator_at(t).trace(); }

double InducedRep::character_norm() const {
    const auto& g = system_->group;
    double acc = 0.0;
    for (int t = 0; t < g.order; ++t) acc += std::norm(character_at(t));
    return acc / g.order;
}

bool InducedRep::irreducible(double tol) const {
    return std::abs(character_norm() - 1.0) <= tol;
}

InducedRep induce(std::shared_ptr<const GroupSystem> system, UnitaryRep sigma,
                  std::string label) {
    return InducedRep(std::move(system), std::move(sigma), std::move(label));
}

Eigen::MatrixXcd induced_operator(const InducedRep& u, int t) { return u.operator_at(t); }

std::complex<double> induced_coefficient(const InducedRep& u, int t, int i, int j) {
    if (i < 0 || i >= u.dim() || j < 0 || j >= u.dim())
        throw Error("induced coefficient index out of range");
    const auto& sys = u.system();
    const double mu = sys.weights.mu_d();
    const int ti = sys.group.inv(t);
    std::complex<double> acc = 0.0;
    for (int gr : sys.cosets.reps)
        acc += mu * u.basis(i)(gr).dot(u.basis(j)(sys.group.mul(ti, gr)));
    // Eigen's dot conjugates its first argument, matching <theta_j(.), theta_i(.)>.
    return acc;
}

EquivariantFunction project_equivariant(const GroupSystem& system, const UnitaryRep& sigma,
                                        const std::function<Eigen::VectorXcd(int)>& eta) {
    const auto& g = system.group;
    const double nu = system.weights.nu_d();
    EquivariantFunction out;
    out.dim = sigma.dim;
    out.values.assign(g.order, Eigen::VectorXcd::Zero(sigma.dim));
    for (int x = 0; x < g.order; ++x) {
        Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(sigma.dim);
        for (int kk : system.sub.members) acc += nu * (sigma.mat(kk) * eta(g.mul(x, kk)));
        out.values[x] = acc;
    }
    return out;
}

double equivariance_residual(const GroupSystem& system, const UnitaryRep& sigma,
                             const EquivariantFunction& u) {
    const auto& g = system.group;
    double worst = 0.0;
    for (int x = 0; x < g.order; ++x)
        for (int kk : system.sub.members) {
            const Eigen::VectorXcd lhs = u(g.mul(x, kk));
            const Eigen::VectorXcd rhs = sigma.mat(g.inv(kk)) * u(x);
            worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
        }
    return worst;
}

AlphaTable alpha(const InducedRep& u) {
    const int order = u.system().group.order;
    AlphaTable tab;
    tab.basis_size = u.dim();
    tab.dim = u.d_sigma();
    tab.order = order;
    tab.data.resize(static_cast<std::size_t>(tab.basis_size) * tab.dim * order);
    for (int i = 0; i < tab.basis_size; ++i)
        for (int s = 0; s < tab.dim; ++s)
            for (int g = 0; g < order; ++g)
                tab.data[(static_cast<std::size_t>(i) * tab.dim + s) * order + g] =
                    u.basis(i)(g)[s];
    return tab;
}

std::complex<double> c_tensor(const InducedRep& u, int i, int j, int l, int m) {
    const auto& sys = u.system();
    const auto& g = sys.group;
    const AlphaTable tab = alpha(u);
    const int d = u.d_sigma();
    const double mu = sys.weights.mu_d();
    const double lam = sys.weights.lambda_d();

    std::complex<double> total = 0.0;
    for (int t = 0; t < g.order; ++t) {
        const int ti = g.inv(t);
        std::complex<double> left = 0.0, right = 0.0;
        for (int gr : sys.cosets.reps) {
            const int tg = g.mul(ti, gr);
            for (int s = 0; s < d; ++s) {
                left += mu * tab(j, s, tg) * std::conj(tab(i, s, gr));
                right += mu * tab(m, s, tg) * std::conj(tab(l, s, gr));
            }
        }
        total += lam * left * std::conj(right);
    }
    return static_cast<double>(d) * total;
}

OrthogonalityReport induced_orthogonality_check(const InducedRep& u, const InducedRep& v) {
    if (u.system_ptr().get() != v.system_ptr().get() &&
        (u.system().group.table != v.system().group.table ||
         u.system().sub.members != v.system().sub.members))
        throw ShapeMismatch("inductions must be built over the same (G, K)");

    const auto& g = u.system().group;
    const double lam = u.system().weights.lambda_d();
    OrthogonalityReport rep{};
    rep.same_sigma = (&u == &v) || (u.label() == v.label());
    rep.u_irreducible = u.irreducible();
    rep.v_irreducible = v.irreducible();

    // <chi_U, chi_V> with normalized Haar; > 0 iff a common constituent.
    std::complex<double> chi_inner = 0.0;
    for (int t = 0; t < g.order; ++t)
        chi_inner += u.character_at(t) * std::conj(v.character_at(t));
    chi_inner /= static_cast<double>(g.order);
    rep.inductions_equivalent = std::abs(chi_inner) > 0.5;

    const int nu_dim = u.dim(), nv_dim = v.dim();
    rep.max_c_contract_residual = 0.0;
    rep.max_delta_residual = 0.0;
    rep.max_cross_integral = 0.0;

    for (int i = 0; i < nu_dim; ++i)
        for (int j = 0; j < nu_dim; ++j)
            for (int l = 0; l < nv_dim; ++l)
                for (int m = 0; m < nv_dim; ++m) {
                    std::complex<double> integral = 0.0;
                    for (int t = 0; t < g.order; ++t)
                        integral += lam * u.operator_at(t)(i, j) *
                                    std::conj(v.operator_at(t)(l, m));
                    if (rep.same_sigma) {
                        const std::complex<double> c = c_tensor(u, i, j, l, m);
                        rep.max_c_contract_residual =
                            std::max(rep.max_c_contract_residual,
                                     std::abs(integral - c / static_cast<double>(u.d_sigma())));
                        if (rep.u_irreducible) {
                            const double delta = (i == l && j == m) ? 1.0 : 0.0;
                            rep.max_delta_residual =
                                std::max(rep.max_delta_residual, std::abs(c - delta));
                        }
                    } else {
                        rep.max_cross_integral =
                            std::max(rep.max_cross_integral, std::abs(integral));
                    }
                }
    return rep;
}

}  // namespace fst
