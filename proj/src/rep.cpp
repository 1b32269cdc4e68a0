#include "fst/rep.hpp"

#include <cmath>

#include "fst/rng.hpp"

namespace fst {

UnitaryRep validate_unitary_rep(const FiniteGroup& g, const Subgroup& k,
                                std::vector<Eigen::MatrixXcd> mats, double tol) {
    if (mats.size() != static_cast<std::size_t>(k.size()))
        throw ShapeMismatch("expected one matrix per subgroup element");
    const int d = static_cast<int>(mats[0].rows());
    if (d < 1) throw ShapeMismatch("representation dimension must be positive");
    for (const auto& m : mats)
        if (m.rows() != d || m.cols() != d)
            throw ShapeMismatch("all matrices must be square of equal dimension");

    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    if ((mats[k.rank(g.identity)] - id).cwiseAbs().maxCoeff() > tol)
        throw BadIdentity("matrix at the identity element is not the identity");
    mats[k.rank(g.identity)] = id;

    for (int kk : k.members) {
        const auto& m = mats[k.rank(kk)];
        if ((m * m.adjoint() - id).cwiseAbs().maxCoeff() > 1e-10)
            throw NotUnitary(kk, "matrix at element " + std::to_string(kk) + " is not unitary");
    }
    for (int k1 : k.members) {
        for (int k2 : k.members) {
            const int k12 = g.mul(k1, k2);
            if ((mats[k.rank(k12)] - mats[k.rank(k1)] * mats[k.rank(k2)]).cwiseAbs().maxCoeff() >
                tol)
                throw NotHomomorphism(k1, k2,
                                      "homomorphism fails at (" + std::to_string(k1) + "," +
                                          std::to_string(k2) + ")");
        }
    }

    UnitaryRep rep;
    rep.sub = k;
    rep.dim = d;
    rep.mats = std::move(mats);
    return rep;
}

UnitaryRep conjugate_rep(const UnitaryRep& rep) {
    UnitaryRep out = rep;
    for (auto& m : out.mats) m = m.conjugate();
    return out;
}

std::complex<double> matrix_coefficient(const UnitaryRep& rep, int k, int i, int j) {
    if (i < 0 || i >= rep.dim || j < 0 || j >= rep.dim)
        throw Error("matrix coefficient index out of range");
    return rep.mat(k)(i, j);
}

std::vector<std::complex<double>> character(const UnitaryRep& rep) {
    std::vector<std::complex<double>> chi(rep.mats.size());
    for (std::size_t r = 0; r < rep.mats.size(); ++r) chi[r] = rep.mats[r].trace();
    return chi;
}

double irreducibility_index(const UnitaryRep& rep) {
    const double nu = 1.0 / rep.order();
    double acc = 0.0;
    for (const auto& chi : character(rep)) acc += nu * std::norm(chi);
    return acc;
}

bool is_irreducible(const UnitaryRep& rep, double tol) {
    return std::abs(irreducibility_index(rep) - 1.0) <= tol;
}

std::optional<Eigen::MatrixXcd> equivalence_check(const UnitaryRep& l, const UnitaryRep& m,
                                                  double tol, int retries, std::uint64_t seed) {
    if (l.dim != m.dim) return std::nullopt;
    if (l.sub.members != m.sub.members)
        throw ShapeMismatch("representations live on different subgroups");
    const int d = l.dim;
    const double nu = 1.0 / l.order();

    for (int attempt = 0; attempt < retries; ++attempt) {
        Rng rng(seed + static_cast<std::uint64_t>(attempt));
        const Eigen::MatrixXcd x = rng.cmatrix(d, d);
        Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(d, d);
        for (std::size_t r = 0; r < l.mats.size(); ++r)
            t += nu * m.mats[r] * x * l.mats[r].adjoint();

        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(t);
        if (svd.singularValues()(d - 1) < 1e-8) continue;  // averaged to ~0, retry

        double resid = 0.0;
        for (std::size_t r = 0; r < l.mats.size(); ++r)
            resid = std::max(resid,
                             (t * l.mats[r] - m.mats[r] * t).cwiseAbs().maxCoeff());
        if (resid <= tol) return t;
    }
    return std::nullopt;
}

static bool same_matrices(const UnitaryRep& l, const UnitaryRep& m) {
    if (l.dim != m.dim || l.mats.size() != m.mats.size()) return false;
    for (std::size_t r = 0; r < l.mats.size(); ++r)
        if ((l.mats[r] - m.mats[r]).cwiseAbs().maxCoeff() > 1e-14) return false;
    return true;
}

SchurResult schur_check(const UnitaryRep& l, const UnitaryRep& m, double tol) {
    if (!is_irreducible(l, tol) || !is_irreducible(m, tol))
        throw PreconditionNotIrreducible("schur_check requires irreducible representations");
    if (l.sub.members != m.sub.members)
        throw ShapeMismatch("representations live on different subgroups");

    const bool same = (&l == &m) || same_matrices(l, m);
    if (!same && equivalence_check(l, m, tol))
        throw Error("schur_check: equivalent but distinct representations have no "
                    "orthogonality target");

    const double nu = 1.0 / l.order();
    const int dl = l.dim, dm = m.dim;
    double worst = 0.0;
    for (int i = 0; i < dl; ++i)
        for (int j = 0; j < dl; ++j)
            for (int ll = 0; ll < dm; ++ll)
                for (int mm = 0; mm < dm; ++mm) {
                    std::complex<double> acc = 0.0;
                    for (std::size_t r = 0; r < l.mats.size(); ++r)
                        acc += nu * l.mats[r](i, j) * std::conj(m.mats[r](ll, mm));
                    const double target =
                        same ? ((i == ll && j == mm) ? 1.0 / dl : 0.0) : 0.0;
                    worst = std::max(worst, std::abs(acc - target));
                }
    return {same ? SchurResult::Relation::Same : SchurResult::Relation::Inequivalent, worst};
}

UnitaryRep direct_sum(const UnitaryRep& a, const UnitaryRep& b) {
    if (a.sub.members != b.sub.members)
        throw ShapeMismatch("direct sum requires representations of the same subgroup");
    UnitaryRep out;
    out.sub = a.sub;
    out.dim = a.dim + b.dim;
    out.mats.reserve(a.mats.size());
    for (std::size_t r = 0; r < a.mats.size(); ++r) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(out.dim, out.dim);
        m.topLeftCorner(a.dim, a.dim) = a.mats[r];
        m.bottomRightCorner(b.dim, b.dim) = b.mats[r];
        out.mats.push_back(std::move(m));
    }
    return out;
}

}  // namespace fst
