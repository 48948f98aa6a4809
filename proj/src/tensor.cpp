#include "modcalc/tensor.hpp"

#include <algorithm>
#include <sstream>

namespace modcalc {

int sort_multi_index(MultiIndex& indices) {
    // Insertion sort, counting transpositions.
    int sign = 1;
    for (size_t i = 1; i < indices.size(); ++i) {
        int v = indices[i];
        size_t j = i;
        while (j > 0 && indices[j - 1] > v) {
            indices[j] = indices[j - 1];
            --j;
            sign = -sign;
        }
        indices[j] = v;
    }
    for (size_t i = 1; i < indices.size(); ++i)
        if (indices[i] == indices[i - 1]) return 0;
    return sign;
}

Tensor Tensor::scalar(const Chart& c, Variance v, FrameKind f,
                      const ScalarFunction& value) {
    Tensor t(c, v, f);
    t.add_component({}, value);
    return t;
}

Tensor Tensor::monomial(const Chart& c, Variance v, FrameKind f,
                        const MultiIndex& indices, const ScalarFunction& coeff) {
    Tensor t(c, v, f);
    t.add_component(indices, coeff);
    return t;
}

std::set<int> Tensor::grades() const {
    std::set<int> out;
    for (const auto& [idx, c] : comps_) out.insert((int)idx.size());
    return out;
}

bool Tensor::is_homogeneous(int grade) const {
    for (const auto& [idx, c] : comps_)
        if ((int)idx.size() != grade) return false;
    return true;
}

int Tensor::max_grade() const {
    int m = 0;
    for (const auto& [idx, c] : comps_) m = std::max(m, (int)idx.size());
    return m;
}

Tensor Tensor::grade_part(int grade) const {
    Tensor out(chart_, var_, frame_);
    for (const auto& [idx, c] : comps_)
        if ((int)idx.size() == grade) out.comps_.emplace(idx, c);
    return out;
}

ScalarFunction Tensor::component(const MultiIndex& indices) const {
    MultiIndex sorted = indices;
    int sign = sort_multi_index(sorted);
    if (sign == 0) return ScalarFunction::zero(dim());
    auto it = comps_.find(sorted);
    if (it == comps_.end()) return ScalarFunction::zero(dim());
    return sign > 0 ? it->second : -it->second;
}

void Tensor::add_component(MultiIndex indices, const ScalarFunction& coeff) {
    if (coeff.is_zero()) return;
    for (int i : indices)
        if (i < 0 || i >= dim())
            throw IndexOutOfRange("tensor index " + std::to_string(i));
    int sign = sort_multi_index(indices);
    if (sign == 0) return;
    ScalarFunction value = sign > 0 ? coeff : -coeff;
    auto it = comps_.find(indices);
    if (it == comps_.end()) {
        comps_.emplace(std::move(indices), std::move(value));
    } else {
        it->second = it->second + value;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

Tensor Tensor::operator-() const {
    Tensor out(chart_, var_, frame_);
    for (const auto& [idx, c] : comps_) out.comps_.emplace(idx, -c);
    return out;
}

Tensor Tensor::operator+(const Tensor& o) const {
    require_compatible(*this, o);
    Tensor out = *this;
    for (const auto& [idx, c] : o.comps_) out.add_component(idx, c);
    return out;
}

Tensor Tensor::operator-(const Tensor& o) const {
    require_compatible(*this, o);
    Tensor out = *this;
    for (const auto& [idx, c] : o.comps_) out.add_component(idx, -c);
    return out;
}

Tensor Tensor::operator*(const ScalarFunction& f) const {
    Tensor out(chart_, var_, frame_);
    if (f.is_zero()) return out;
    for (const auto& [idx, c] : comps_) {
        ScalarFunction v = c * f;
        if (!v.is_zero()) out.comps_.emplace(idx, std::move(v));
    }
    return out;
}

bool Tensor::operator==(const Tensor& o) const {
    return chart_ == o.chart_ && var_ == o.var_ && frame_ == o.frame_ &&
           comps_ == o.comps_;
}

Tensor Tensor::with_variance(Variance v) const {
    Tensor out(chart_, v, frame_);
    for (const auto& [idx, c] : comps_) out.comps_.emplace(idx, c);
    return out;
}

Tensor Tensor::with_frame(FrameKind f) const {
    Tensor out(chart_, var_, f);
    for (const auto& [idx, c] : comps_) out.comps_.emplace(idx, c);
    return out;
}

std::string Tensor::to_string() const {
    if (comps_.empty()) return "0";
    // Basis symbols by frame and variance.
    std::ostringstream os;
    bool first = true;
    std::vector<std::pair<MultiIndex, ScalarFunction>> items(comps_.begin(), comps_.end());
    std::stable_sort(items.begin(), items.end(),
                     [](const auto& a, const auto& b) {
                         return a.first.size() < b.first.size();
                     });
    for (const auto& [idx, c] : items) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string(chart_.coords) << ")";
        for (int i : idx) {
            os << (var_ == Variance::form ? "*d[" : "*e[") << chart_.coords[i] << "]";
        }
    }
    return os.str();
}

void require_compatible(const Tensor& a, const Tensor& b) {
    if (a.chart() != b.chart())
        throw FrameMismatch("tensors live on different charts");
    if (a.frame() != b.frame())
        throw FrameMismatch("tensors expressed in different frames");
    if (a.variance() != b.variance())
        throw FrameMismatch("multivector/form kind mismatch");
}

Tensor wedge(const Tensor& a, const Tensor& b) {
    require_compatible(a, b);
    Tensor out(a.chart(), a.variance(), a.frame());
    MultiIndex merged;
    for (const auto& [ia, ca] : a.components()) {
        for (const auto& [ib, cb] : b.components()) {
            merged = ia;
            merged.insert(merged.end(), ib.begin(), ib.end());
            out.add_component(merged, ca * cb);
        }
    }
    return out;
}

Tensor frame_derivative(const Tensor& t, int index) {
    Tensor out(t.chart(), t.variance(), t.frame());
    for (const auto& [idx, c] : t.components()) {
        for (size_t pos = 0; pos < idx.size(); ++pos) {
            if (idx[pos] != index) continue;
            MultiIndex rest;
            rest.reserve(idx.size() - 1);
            for (size_t k = 0; k < idx.size(); ++k)
                if (k != pos) rest.push_back(idx[k]);
            out.add_component(std::move(rest), (pos % 2 == 0) ? c : -c);
            break;
        }
    }
    return out;
}

Tensor coefficient_derivative(const Tensor& t, int var) {
    Tensor out(t.chart(), t.variance(), t.frame());
    for (const auto& [idx, c] : t.components())
        out.add_component(idx, c.derivative(var));
    return out;
}

} // namespace modcalc
