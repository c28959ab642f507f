#include "cftp/families/filament.hpp"

#include <algorithm>

namespace cftp {

FilamentSystem::FilamentSystem(const BoxesParams& params) : params_(params) {
    validate(params);
    for (int i = 0; i < params.a; ++i)
        for (int j = 0; j < params.b; ++j)
            for (int k = 0; k < params.c; ++k) {
                if (std::min({i, j, k}) != 0) continue;
                starts_.push_back({i, j, k});
                lengths_.push_back(std::min({params.a - i, params.b - j, params.c - k}));
            }
}

int FilamentSystem::filament_length(Site x) const { return lengths_[x]; }

PlanePartition FilamentSystem::top() const {
    PlanePartition pp(params_.a, params_.b);
    std::fill(pp.parts.begin(), pp.parts.end(), params_.c);
    return pp;
}

bool FilamentSystem::leq(const State& a, const State& b) const noexcept {
    for (std::size_t i = 0; i < a.parts.size(); ++i)
        if (a.parts[i] > b.parts[i]) return false;
    return true;
}

}  // namespace cftp
