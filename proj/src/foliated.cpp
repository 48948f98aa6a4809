#include "modcalc/foliated.hpp"

#include <algorithm>
#include <set>

namespace modcalc {

Chart AdaptedSplit::chart() const {
    Chart c;
    c.coords = horizontal;
    c.coords.insert(c.coords.end(), vertical.begin(), vertical.end());
    return c;
}

void AdaptedSplit::validate() const {
    if (q() < 1) throw FrameMismatch("adapted split needs at least one vertical coordinate");
    std::set<std::string> seen;
    for (const auto& n : horizontal)
        if (!seen.insert(n).second) throw FrameMismatch("duplicate coordinate '" + n + "'");
    for (const auto& n : vertical)
        if (!seen.insert(n).second) throw FrameMismatch("duplicate coordinate '" + n + "'");
}

ConnectionForm ConnectionForm::flat(const AdaptedSplit& split) {
    ConnectionForm g;
    g.split = split;
    g.gamma.assign(split.p(), std::vector<ScalarFunction>(
                                  split.q(), ScalarFunction::zero(split.dim())));
    return g;
}

void ConnectionForm::validate() const {
    split.validate();
    if ((int)gamma.size() != split.p())
        throw FrameMismatch("connection matrix has wrong number of rows");
    for (const auto& row : gamma) {
        if ((int)row.size() != split.q())
            throw FrameMismatch("connection matrix has wrong number of columns");
        for (const auto& f : row)
            if (f.nvars() != split.dim())
                throw FrameMismatch("connection entry on wrong chart");
    }
}

Tensor ConnectionForm::horizontal_field(int i) const {
    const int n = split.dim();
    if (i < 0 || i >= split.p()) throw IndexOutOfRange("horizontal index");
    Tensor h(split.chart(), Variance::multivector, FrameKind::coordinate);
    h.add_component({i}, ScalarFunction::one(n));
    for (int a = 0; a < split.q(); ++a)
        h.add_component({split.p() + a}, -gamma[i][a]);
    return h;
}

Tensor ConnectionForm::project_vertical(const Tensor& X) const {
    if (X.frame() != FrameKind::coordinate || X.variance() != Variance::multivector)
        throw FrameMismatch("vertical projection takes a coordinate vector field");
    const int p = split.p(), q = split.q(), n = split.dim();
    Tensor out(split.chart(), Variance::multivector, FrameKind::coordinate);
    for (const auto& [idx, c] : X.components()) {
        if (idx.size() != 1) throw FrameMismatch("vertical projection needs grade 1");
        int i = idx[0];
        if (i >= p) {
            out.add_component({i}, c);
        } else {
            // gamma(d/dx_i) = Gamma_i^a d/dy_a.
            for (int a = 0; a < q; ++a)
                out.add_component({p + a}, c * gamma[i][a]);
        }
    }
    (void)n;
    return out;
}

namespace {

// Frame substitution: each old frame index maps to a linear combination
// of new frame indices; components are expanded through the wedge.
Tensor substitute_frame(const Tensor& T, FrameKind new_frame,
                        const std::vector<std::vector<std::pair<int, ScalarFunction>>>& image) {
    Tensor out(T.chart(), T.variance(), new_frame);
    for (const auto& [idx, c] : T.components()) {
        // Formal product of the 1-vector images of the indices.
        std::vector<std::pair<MultiIndex, ScalarFunction>> acc;
        acc.emplace_back(MultiIndex{}, c);
        for (int i : idx) {
            std::vector<std::pair<MultiIndex, ScalarFunction>> next;
            for (const auto& [I, f] : acc) {
                for (const auto& [j, coeff] : image[i]) {
                    MultiIndex J = I;
                    J.push_back(j);
                    ScalarFunction v = f * coeff;
                    if (!v.is_zero()) next.emplace_back(std::move(J), std::move(v));
                }
            }
            acc = std::move(next);
        }
        for (auto& [I, f] : acc) out.add_component(std::move(I), f);
    }
    return out;
}

std::vector<std::vector<std::pair<int, ScalarFunction>>>
frame_map(const ConnectionForm& gamma, bool to_adapted, Variance var) {
    const int p = gamma.split.p(), q = gamma.split.q(), n = gamma.split.dim();
    std::vector<std::vector<std::pair<int, ScalarFunction>>> image(n);
    const ScalarFunction one = ScalarFunction::one(n);
    if (var == Variance::multivector) {
        if (to_adapted) {
            // d/dx_i = h_i + Gamma_i^a d/dy_a ; d/dy_a = d/dy_a.
            for (int i = 0; i < p; ++i) {
                image[i].emplace_back(i, one);
                for (int a = 0; a < q; ++a)
                    image[i].emplace_back(p + a, gamma.gamma[i][a]);
            }
        } else {
            // h_i = d/dx_i - Gamma_i^a d/dy_a.
            for (int i = 0; i < p; ++i) {
                image[i].emplace_back(i, one);
                for (int a = 0; a < q; ++a)
                    image[i].emplace_back(p + a, -gamma.gamma[i][a]);
            }
        }
        for (int a = 0; a < q; ++a) image[p + a].emplace_back(p + a, one);
    } else {
        // dx_i is shared by both coframes.
        for (int i = 0; i < p; ++i) image[i].emplace_back(i, one);
        if (to_adapted) {
            // dy_a = eta_a - Gamma_i^a dx_i.
            for (int a = 0; a < q; ++a) {
                image[p + a].emplace_back(p + a, one);
                for (int i = 0; i < p; ++i)
                    image[p + a].emplace_back(i, -gamma.gamma[i][a]);
            }
        } else {
            // eta_a = dy_a + Gamma_i^a dx_i.
            for (int a = 0; a < q; ++a) {
                image[p + a].emplace_back(p + a, one);
                for (int i = 0; i < p; ++i)
                    image[p + a].emplace_back(i, gamma.gamma[i][a]);
            }
        }
    }
    return image;
}

} // namespace

Tensor to_adapted_frame(const Tensor& T, const ConnectionForm& gamma) {
    if (T.chart() != gamma.split.chart())
        throw FrameMismatch("tensor chart does not match the split");
    if (T.frame() == FrameKind::adapted) return T;
    return substitute_frame(T, FrameKind::adapted,
                            frame_map(gamma, true, T.variance()));
}

Tensor to_coordinate_frame(const Tensor& T, const ConnectionForm& gamma) {
    if (T.chart() != gamma.split.chart())
        throw FrameMismatch("tensor chart does not match the split");
    if (T.frame() == FrameKind::coordinate) return T;
    return substitute_frame(T, FrameKind::coordinate,
                            frame_map(gamma, false, T.variance()));
}

Tensor BigradedTensor::part(int pg, int qg) const {
    auto it = parts.find({pg, qg});
    if (it != parts.end()) return it->second;
    return Tensor::zero(chart, variance, FrameKind::adapted);
}

Tensor BigradedTensor::assemble() const {
    Tensor out = Tensor::zero(chart, variance, FrameKind::adapted);
    for (const auto& [key, t] : parts) out = out + t;
    return out;
}

BigradedTensor bigrade(const Tensor& T, const ConnectionForm& gamma) {
    Tensor ad = to_adapted_frame(T, gamma);
    const int p = gamma.split.p();
    BigradedTensor out{ad.chart(), ad.variance(), {}};
    for (const auto& [idx, c] : ad.components()) {
        int pg = 0;
        for (int i : idx)
            if (i < p) ++pg;
        int qg = (int)idx.size() - pg;
        auto key = std::make_pair(pg, qg);
        auto it = out.parts.find(key);
        if (it == out.parts.end()) {
            Tensor t = Tensor::zero(ad.chart(), ad.variance(), FrameKind::adapted);
            t.add_component(idx, c);
            out.parts.emplace(key, std::move(t));
        } else {
            it->second.add_component(idx, c);
        }
    }
    return out;
}

Curvature curvature(const ConnectionForm& gamma) {
    Curvature R;
    const int p = gamma.split.p();
    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
            Tensor bracket = schouten_bracket(gamma.horizontal_field(i),
                                              gamma.horizontal_field(j));
            R.emplace(std::make_pair(i, j), gamma.project_vertical(bracket));
        }
    }
    return R;
}

bool is_flat(const Curvature& R) {
    for (const auto& [key, v] : R)
        if (!v.is_zero()) return false;
    return true;
}

DComponents d_components(const Tensor& beta, const ConnectionForm& gamma) {
    if (beta.variance() != Variance::form)
        throw FrameMismatch("d splits on forms");
    BigradedTensor parts = bigrade(beta, gamma);
    Tensor d10 = Tensor::zero(parts.chart, Variance::form, FrameKind::adapted);
    Tensor d01 = d10, d2m1 = d10;
    for (const auto& [key, part] : parts.parts) {
        Tensor d = exterior_derivative(to_coordinate_frame(part, gamma));
        BigradedTensor db = bigrade(d, gamma);
        for (const auto& [dk, dpart] : db.parts) {
            int dp = dk.first - key.first, dq = dk.second - key.second;
            if (dp == 1 && dq == 0) d10 = d10 + dpart;
            else if (dp == 0 && dq == 1) d01 = d01 + dpart;
            else if (dp == 2 && dq == -1) d2m1 = d2m1 + dpart;
            else if (!dpart.is_zero())
                throw FrameMismatch("exterior derivative left the expected bidegrees");
        }
    }
    return {std::move(d10), std::move(d01), std::move(d2m1)};
}

Tensor curvature_insertion(const Curvature& R, const ConnectionForm& gamma,
                           const Tensor& beta) {
    Tensor ad = to_adapted_frame(beta, gamma);
    const int n = gamma.split.dim();
    Tensor out = Tensor::zero(ad.chart(), Variance::form, FrameKind::adapted);
    for (const auto& [key, Rij] : R) {
        if (Rij.is_zero()) continue;
        // R(h_i,h_j) is vertical, so its adapted components coincide
        // with the coordinate ones.
        Tensor Rad = Rij.with_frame(FrameKind::adapted);
        Tensor inserted = interior_product(Rad, ad);
        if (inserted.is_zero()) continue;
        Tensor dxdx(ad.chart(), Variance::form, FrameKind::adapted);
        dxdx.add_component({key.first, key.second}, ScalarFunction::one(n));
        out = out + wedge(dxdx, inserted);
    }
    return out;
}

Tensor foliated_derivative(const Tensor& mu, const ConnectionForm& gamma) {
    const int p = gamma.split.p();
    Tensor ad = mu.frame() == FrameKind::adapted ? mu : to_adapted_frame(mu, gamma);
    for (const auto& [idx, c] : ad.components())
        for (int i : idx)
            if (i < p) throw WrongBidegree("foliated derivative needs a pure (0,k) tensor");
    return d_components(ad, gamma).d01;
}

Tensor solve_wedge_factor(const Tensor& omega, const VolumeForm& varsigma,
                          const std::vector<int>& support) {
    const Tensor& vol = varsigma.form;
    const int n = vol.dim();
    const auto& [vidx, g] = *vol.components().begin();
    Tensor lambda(vol.chart(), Variance::form, vol.frame());
    for (int c : support) {
        Tensor e(vol.chart(), Variance::form, vol.frame());
        e.add_component({c}, ScalarFunction::one(n));
        Tensor probe = wedge(e, vol); // single component (+/- g) or zero
        if (probe.is_zero()) continue;
        const auto& [pidx, pc] = *probe.components().begin();
        ScalarFunction coeff = omega.component(pidx) / pc;
        lambda.add_component({c}, coeff);
    }
    Tensor residual = omega - wedge(lambda, vol);
    if (!residual.is_zero())
        throw DegenerateVolume("wedge equation has no solution in the requested coframe");
    return lambda;
}

Tensor divergence_form(const VolumeForm& tau, const ConnectionForm& gamma) {
    const int p = gamma.split.p(), q = gamma.split.q();
    tau.validate(q);
    if (tau.form.frame() != FrameKind::adapted)
        throw FrameMismatch("leaf-wise volume must be an adapted (0,q) tensor");
    for (int i : tau.form.components().begin()->first)
        if (i < p) throw WrongBidegree("leaf-wise volume must be purely vertical");
    Tensor d10 = d_components(tau.form, gamma).d10;
    std::vector<int> support(p);
    for (int i = 0; i < p; ++i) support[i] = i;
    return solve_wedge_factor(d10, tau, support);
}

Tensor reeb_form(const VolumeForm& varsigma, const ConnectionForm& gamma) {
    const int p = gamma.split.p(), q = gamma.split.q();
    varsigma.validate(p);
    if (varsigma.form.frame() != FrameKind::adapted)
        throw FrameMismatch("transversal volume must be an adapted (p,0) tensor");
    for (int i : varsigma.form.components().begin()->first)
        if (i >= p) throw WrongBidegree("transversal volume must be purely horizontal");
    Tensor d01 = d_components(varsigma.form, gamma).d01;
    std::vector<int> support(q);
    for (int a = 0; a < q; ++a) support[a] = p + a;
    return solve_wedge_factor(d01, varsigma, support);
}

bool is_projectable(const Tensor& X, const AdaptedSplit& split) {
    if (!X.is_homogeneous(1) || X.variance() != Variance::multivector)
        throw FrameMismatch("projectability is a vector-field test");
    const int p = split.p(), n = split.dim();
    for (const auto& [idx, c] : X.components()) {
        if (idx[0] >= p) continue;
        for (int v = p; v < n; ++v)
            if (!c.derivative(v).is_zero()) return false;
    }
    return true;
}

ScalarFunction leafwise_divergence(const Tensor& X, const VolumeForm& tau,
                                   const ConnectionForm& gamma) {
    const int q = gamma.split.q();
    tau.validate(q);
    Tensor tau_coord = to_coordinate_frame(tau.form, gamma);
    Tensor X_coord = X.frame() == FrameKind::coordinate
                         ? X
                         : to_coordinate_frame(X, gamma);
    Tensor lie = lie_derivative(X_coord, tau_coord);
    Tensor part = bigrade(lie, gamma).part(0, q);
    if (part.is_zero()) return ScalarFunction::zero(gamma.split.dim());
    const auto& [idx, g] = *tau.form.components().begin();
    return part.component(idx) / g;
}

Tensor restrict_to_leaf(const Tensor& T, const AdaptedSplit& split,
                        const Point& base_point) {
    const int p = split.p(), q = split.q();
    if ((int)base_point.size() != p)
        throw IndexOutOfRange("leaf point dimension mismatch");
    std::map<int, Rational> assign;
    for (int i = 0; i < p; ++i) assign.emplace(i, base_point[i]);
    Chart leaf_chart;
    leaf_chart.coords = split.vertical;
    Tensor out(leaf_chart, T.variance(), T.frame());
    for (const auto& [idx, c] : T.components()) {
        bool horizontal = false;
        for (int i : idx)
            if (i < p) horizontal = true;
        if (horizontal) continue;
        MultiIndex shifted;
        shifted.reserve(idx.size());
        for (int i : idx) shifted.push_back(i - p);
        out.add_component(shifted, c.eliminate(assign));
    }
    (void)q;
    return out;
}

} // namespace modcalc
