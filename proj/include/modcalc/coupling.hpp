#pragma once

#include <optional>
#include <string>

#include "modcalc/poisson.hpp"

namespace modcalc {

/// Geometric data (gamma, sigma, P) of a coupling Poisson structure:
/// connection, H-nondegenerate coupling 2-form of bidegree (2,0), and
/// the leaf-tangent Poisson bivector.
struct GeometricData {
    ConnectionForm gamma;
    Tensor sigma; // adapted (2,0) form
    PoissonFoliationData P;

    int l() const { return gamma.split.p() / 2; }
    void validate() const;

    /// sigma as a p x p antisymmetric matrix sigma(h_i, h_j).
    FunMatrix sigma_matrix() const;
};

/// Outcome of the structure-equation checks, with exact residuals for
/// whatever failed.
struct CouplingReport {
    bool se0_ok = false, se1_ok = false, se2_ok = false, jacobi_ok = false;
    std::vector<std::pair<std::string, Tensor>> residuals;

    bool all_ok() const { return se0_ok && se1_ok && se2_ok && jacobi_ok; }
};

/// Result of is_coupling: "generically" is the symbolic determinant
/// test, "at_samples" the spot checks.
struct CouplingTest {
    bool generically = false;
    bool at_samples = false;
    bool ok() const { return generically && at_samples; }
};

CouplingTest is_coupling(const PoissonBivector& Pi, const AdaptedSplit& split,
                         const std::vector<Point>& samples);

/// Splits a coupling Poisson bivector into its geometric data; throws
/// NotCoupling when the horizontal block is symbolically degenerate.
GeometricData decompose(const PoissonBivector& Pi, const AdaptedSplit& split);

/// Rebuilds the coupling bivector from geometric data (coordinate frame).
PoissonBivector reconstruct(const GeometricData& gd);

CouplingReport structure_equations_check(const GeometricData& gd);

/// Proposition-level modular decomposition for Omega = sigma^l ^ tau_gamma.
struct ModularDecomposition {
    Tensor Z;           // coordinate frame
    Tensor Z10, Z01;    // adapted frame bigraded parts
    bool components_match = false;   // Z10 == -Pi#(theta), Z01 == Z_P^tau
    bool interior_power_identity = false; // i_{Pi_H} sigma^l == -l sigma^(l-1)
    bool curvature_identity = false;      // i_{Pi_H} R == P#(Lambda)
    bool ok() const {
        return components_match && interior_power_identity && curvature_identity;
    }
};

ModularDecomposition modular_decomposition_check(const GeometricData& gd,
                                                 const VolumeForm& tau);

/// Gauge transform by B = -d(mu); requires Id - B_flat Pi_sharp to be
/// symbolically invertible and nonsingular at the samples.
PoissonBivector gauge_transform(const PoissonBivector& Pi, const Tensor& mu,
                                const std::vector<Point>& samples);

/// Checks the connection and divergence-form transition rules for the
/// gauge transform by mu (horizontal 1-form) with leaf-wise volume tau.
bool gauge_relations_check(const PoissonBivector& Pi, const Tensor& mu,
                           const VolumeForm& tau, const AdaptedSplit& split,
                           const std::vector<Point>& samples);

struct UnimodularityCertificate {
    bool zp_zero = false;
    bool theta_closed_zero = false;
    std::string verdict; // "unimodular-certified" | "inconclusive"
    bool certified() const { return zp_zero && theta_closed_zero; }
};

UnimodularityCertificate unimodularity_certificate(const GeometricData& gd,
                                                   const VolumeForm& tau);

/// Modular field equals the Hamiltonian field of the certificate
/// (a scalar, or a closed 1-form standing for d ln of a function).
bool hamiltonian_certificate(const PoissonBivector& Pi, const VolumeForm& Omega,
                             const ScalarFunction& cert);
bool hamiltonian_certificate(const PoissonBivector& Pi, const VolumeForm& Omega,
                             const Tensor& cert_one_form);

/// Optional leaf data for flat_coupling_build: points of the leaf
/// (vertical coordinates zero there) and the base symplectic form.
struct LeafData {
    std::vector<Point> leaf_samples; // full-chart points on the leaf
    Tensor base_form;                // adapted (2,0), coefficients in x only
};

struct FlatCouplingResult {
    GeometricData data;
    CouplingReport report;
};

/// Builds the flat coupling structure from a closed Casimir-valued
/// H-nondegenerate sigma0 and a vertical Poisson P (flat connection).
FlatCouplingResult flat_coupling_build(const AdaptedSplit& split, const Tensor& sigma0,
                                       const PoissonBivector& P,
                                       const std::vector<Point>& nondegeneracy_samples,
                                       const std::optional<LeafData>& leaf);

} // namespace modcalc
