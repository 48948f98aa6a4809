#pragma once

#include <map>
#include <utility>

#include "modcalc/exterior.hpp"
#include "modcalc/matrix.hpp"

namespace modcalc {

/// Adapted chart for a simple foliation: the first p coordinates are
/// horizontal (base), the last q vertical (leaf); the foliation is by
/// level sets of the horizontal coordinates.
struct AdaptedSplit {
    std::vector<std::string> horizontal;
    std::vector<std::string> vertical;

    int p() const { return (int)horizontal.size(); }
    int q() const { return (int)vertical.size(); }
    int dim() const { return p() + q(); }
    Chart chart() const;
    bool operator==(const AdaptedSplit& o) const {
        return horizontal == o.horizontal && vertical == o.vertical;
    }

    void validate() const; // q >= 1, disjoint names
};

/// Connection form on an adapted chart, determined by the p x q matrix
/// Gamma: the horizontal frame is h_i = d/dx_i - Gamma_i^a d/dy_a, the
/// dual coframe eta_a = dy_a + Gamma_i^a dx_i.
struct ConnectionForm {
    AdaptedSplit split;
    std::vector<std::vector<ScalarFunction>> gamma; // p rows, q columns

    static ConnectionForm flat(const AdaptedSplit& split);

    /// h_i as a coordinate-frame vector field.
    Tensor horizontal_field(int i) const;
    /// Vertical projection gamma(X) along the horizontal bundle
    /// (coordinate-frame vector field in, vertical field out).
    Tensor project_vertical(const Tensor& X) const;

    void validate() const;
};

/// Bigraded decomposition of a tensor in an adapted frame, keyed by
/// (horizontal grade, vertical grade).
struct BigradedTensor {
    Chart chart;
    Variance variance;
    std::map<std::pair<int, int>, Tensor> parts;

    Tensor part(int pg, int qg) const;
    /// Sum of all parts as one adapted-frame tensor.
    Tensor assemble() const;
};

/// Change of frame: coordinate <-> adapted (h_i, d/dy_a) / (dx_i, eta_a).
Tensor to_adapted_frame(const Tensor& T, const ConnectionForm& gamma);
Tensor to_coordinate_frame(const Tensor& T, const ConnectionForm& gamma);

/// Splits an adapted or coordinate tensor into bigraded parts.
BigradedTensor bigrade(const Tensor& T, const ConnectionForm& gamma);

/// Curvature values R(h_i, h_j) = gamma([h_i, h_j]) for i < j, each a
/// vertical coordinate-frame vector field.
using Curvature = std::map<std::pair<int, int>, Tensor>;
Curvature curvature(const ConnectionForm& gamma);

bool is_flat(const Curvature& R);

/// The three bigraded components of the exterior differential.
struct DComponents {
    Tensor d10, d01, d2m1; // adapted frame
};
DComponents d_components(const Tensor& beta, const ConnectionForm& gamma);

/// Insertion of the curvature 2-form: i_R(beta) = sum_{i<j} dx_i ^ dx_j ^
/// i_{R(h_i,h_j)}(beta); the paper's d_{2,-1} equals -i_R.
Tensor curvature_insertion(const Curvature& R, const ConnectionForm& gamma,
                           const Tensor& beta);

/// Foliated exterior derivative of a pure-(0,k) adapted tensor.
Tensor foliated_derivative(const Tensor& mu, const ConnectionForm& gamma);

/// Leaf-wise volume tau (adapted (0,q), single component) -> divergence
/// form theta in Span{dx_i} with d10(tau) = theta ^ tau.
Tensor divergence_form(const VolumeForm& tau, const ConnectionForm& gamma);

/// Transversal volume sigma (adapted (p,0), single component) -> Reeb
/// form lambda in Span{eta_a} with d01(sigma) = lambda ^ sigma.
Tensor reeb_form(const VolumeForm& varsigma, const ConnectionForm& gamma);

/// True iff the horizontal components of X depend on the base
/// coordinates only.
bool is_projectable(const Tensor& X, const AdaptedSplit& split);

/// Leaf-wise divergence of a projectable or vertical field:
/// div(X) * tau = (L_X tau_gamma)_{0,q}.
ScalarFunction leafwise_divergence(const Tensor& X, const VolumeForm& tau,
                                   const ConnectionForm& gamma);

/// Solves omega = lambda ^ varsigma for a 1-form lambda supported on the
/// coframe indices in `support`; throws DegenerateVolume when no exact
/// solution exists.
Tensor solve_wedge_factor(const Tensor& omega, const VolumeForm& varsigma,
                          const std::vector<int>& support);

/// Substitute the horizontal coordinates with the rationals in
/// `base_point`, producing a tensor on the vertical-only chart. Only
/// components free of horizontal frame indices survive.
Tensor restrict_to_leaf(const Tensor& T, const AdaptedSplit& split,
                        const Point& base_point);

} // namespace modcalc
