#include "monofock/anti_monotone.hpp"

#include "monofock/errors.hpp"

namespace monofock {

MomentSpec mirror_spec(const MomentSpec& spec)
{
    return MomentSpec(spec.word, spec.functions, opposite(spec.order));
}

MomentSpec reflect_functions(const MomentSpec& spec)
{
    std::vector<TestFunction> reflected;
    reflected.reserve(spec.functions.size());
    for (const TestFunction& f : spec.functions) {
        reflected.push_back(f.reflected());
    }
    return MomentSpec(spec.word, std::move(reflected), spec.order);
}

bool verify_anti_relations(int i, int j, int mode_cap)
{
    if (mode_cap < 1) {
        throw InvalidArgument("mode cap must be positive");
    }
    const auto probes = all_basis_vectors(Order::anti_monotone, mode_cap, mode_cap);
    return verify_relations(i, j, probes);
}

} // namespace monofock
