#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "modcalc/scalar_function.hpp"

namespace modcalc {

/// Coordinate chart: an ordered list of coordinate names.
struct Chart {
    std::vector<std::string> coords;

    int dim() const { return (int)coords.size(); }
    bool operator==(const Chart& o) const { return coords == o.coords; }
    bool operator!=(const Chart& o) const { return !(*this == o); }
};

/// Strictly increasing list of frame indices.
using MultiIndex = std::vector<int>;

enum class Variance { multivector, form };
enum class FrameKind { coordinate, adapted };

/// Sparse exterior tensor on a chart: a formal sum of grades, each
/// component keyed by a strictly increasing multi-index over the frame.
///
/// In the coordinate frame index i means del/del(x_i) (multivectors) or
/// dx_i (forms). In an adapted frame for a split with p horizontal
/// coordinates, index i < p means h_i / dx_i and index p+a means
/// del/del(y_a) / eta_a; which connection the frame belongs to is
/// tracked by the caller (the foliated operations take it explicitly).
class Tensor {
public:
    using Components = std::map<MultiIndex, ScalarFunction>;

    Tensor(Chart chart, Variance var, FrameKind frame)
        : chart_(std::move(chart)), var_(var), frame_(frame) {}

    static Tensor zero(const Chart& c, Variance v,
                       FrameKind f = FrameKind::coordinate) {
        return Tensor(c, v, f);
    }
    /// Grade-0 tensor with the given coefficient.
    static Tensor scalar(const Chart& c, Variance v, FrameKind f,
                         const ScalarFunction& value);
    /// Single-component tensor c * e_I.
    static Tensor monomial(const Chart& c, Variance v, FrameKind f,
                           const MultiIndex& indices, const ScalarFunction& coeff);

    const Chart& chart() const { return chart_; }
    Variance variance() const { return var_; }
    FrameKind frame() const { return frame_; }
    int dim() const { return chart_.dim(); }
    const Components& components() const { return comps_; }

    bool is_zero() const { return comps_.empty(); }
    /// Distinct grades present (empty for the zero tensor).
    std::set<int> grades() const;
    bool is_homogeneous(int grade) const;
    int max_grade() const;
    Tensor grade_part(int grade) const;

    /// Component at a (not necessarily sorted) index list; contributes
    /// the permutation sign, and 0 on repeated indices.
    ScalarFunction component(const MultiIndex& indices) const;

    void add_component(MultiIndex indices, const ScalarFunction& coeff);

    Tensor operator-() const;
    Tensor operator+(const Tensor& o) const;
    Tensor operator-(const Tensor& o) const;
    Tensor operator*(const ScalarFunction& f) const;
    bool operator==(const Tensor& o) const;
    bool operator!=(const Tensor& o) const { return !(*this == o); }

    /// Same components reinterpreted under the other variance/frame tag.
    Tensor with_variance(Variance v) const;
    Tensor with_frame(FrameKind f) const;

    std::string to_string() const;

private:
    Chart chart_;
    Variance var_;
    FrameKind frame_;
    Components comps_;
};

/// Sign of sorting `indices` ascending; 0 if an index repeats.
/// Sorted result is written back into `indices`.
int sort_multi_index(MultiIndex& indices);

/// Requires equal chart, frame and variance; throws FrameMismatch.
void require_compatible(const Tensor& a, const Tensor& b);

/// Graded-commutative wedge product of same-kind tensors.
Tensor wedge(const Tensor& a, const Tensor& b);

/// Left Grassmann derivative with respect to frame index i: removes the
/// index with the position sign, grade drops by one.
Tensor frame_derivative(const Tensor& t, int index);

/// Coefficient-wise coordinate derivative (coordinate-frame callers
/// only decide what it means; no frame check here).
Tensor coefficient_derivative(const Tensor& t, int var);

} // namespace modcalc
