#pragma once

#include "pyra/block.hpp"

namespace pyra::detail {

// Maps between a component design living on {0..|carrier|-1} and the
// ambient ground set: local point i is the i-th smallest carrier point.
struct CarrierMap {
    int ambient_v;
    std::vector<int> pts;  // ascending

    explicit CarrierMap(const Block& carrier) : ambient_v(carrier.v()), pts(carrier.points()) {}

    int local_v() const { return static_cast<int>(pts.size()); }

    Block embed(const Block& local) const {
        Block out(ambient_v);
        for (int i : local.points()) out.add(pts.at(static_cast<std::size_t>(i)));
        return out;
    }

    Block localize(const Block& ambient_subset) const {
        Block out(local_v());
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (ambient_subset.contains(pts[i])) out.add(static_cast<int>(i));
        if (out.size() != ambient_subset.size())
            throw std::invalid_argument("subset leaves the carrier");
        return out;
    }
};

}  // namespace pyra::detail
