#include "ratmle/contingency.hpp"

#include <algorithm>
#include <stdexcept>

namespace ratmle {

std::size_t ContingencyTable::size() const {
    std::size_t s = 1;
    for (std::size_t d : dims) s *= d;
    return s;
}

std::size_t ContingencyTable::flat_index(const std::vector<std::size_t>& idx) const {
    if (idx.size() != dims.size()) throw std::invalid_argument("index arity mismatch");
    std::size_t flat = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (idx[k] >= dims[k]) throw std::out_of_range("table index out of range");
        flat = flat * dims[k] + idx[k];
    }
    return flat;
}

std::vector<std::size_t> ContingencyTable::unflatten(std::size_t flat) const {
    std::vector<std::size_t> idx(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        idx[k] = flat % dims[k];
        flat /= dims[k];
    }
    return idx;
}

const Rational& ContingencyTable::at(const std::vector<std::size_t>& idx) const {
    return counts[flat_index(idx)];
}
Rational& ContingencyTable::at(const std::vector<std::size_t>& idx) {
    return counts[flat_index(idx)];
}

Rational ContingencyTable::total() const {
    Rational t(0);
    for (const auto& c : counts) t += c;
    return t;
}

void ContingencyTable::validate() const {
    for (std::size_t d : dims)
        if (d == 0) throw std::invalid_argument("table axis with zero states");
    if (counts.size() != size()) throw std::invalid_argument("count array size mismatch");
    for (const auto& c : counts)
        if (c < 0) throw std::invalid_argument("negative table entry");
}

ContingencyTable marginal(const ContingencyTable& u, std::vector<std::size_t> C) {
    u.validate();
    std::sort(C.begin(), C.end());
    if (std::adjacent_find(C.begin(), C.end()) != C.end())
        throw std::invalid_argument("duplicate axis in marginal");
    for (std::size_t a : C)
        if (a >= u.ways()) throw std::invalid_argument("marginal axis out of range");

    ContingencyTable out;
    for (std::size_t a : C) out.dims.push_back(u.dims[a]);
    out.counts.assign(out.size(), Rational(0));
    for (std::size_t flat = 0; flat < u.counts.size(); ++flat) {
        auto idx = u.unflatten(flat);
        std::size_t oflat = 0;
        for (std::size_t k = 0; k < C.size(); ++k) oflat = oflat * u.dims[C[k]] + idx[C[k]];
        out.counts[oflat] += u.counts[flat];
    }
    return out;
}

}  // namespace ratmle
