#include "rmq/optimizer/mutations.hpp"

#include <cassert>

namespace rmq {

std::vector<Plan> mutations(const CostModel &model, const Plan &p) {
    std::vector<Plan> out;
    for_each_mutation(model, p, [&](Plan m) { out.push_back(std::move(m)); });
    return out;
}

const Plan &node_at(const Plan &root, std::size_t index) {
    const Plan *p = &root;
    while (index != 0) {
        assert(p->is_join());
        std::size_t outer = p->outer().node_count();
        if (index <= outer) {
            p = &p->outer();
            index -= 1;
        } else {
            p = &p->inner();
            index -= 1 + outer;
        }
    }
    return *p;
}

Plan replace_node(const CostModel &model, const Plan &root, std::size_t index, const Plan &replacement) {
    if (index == 0) {
        assert(replacement.rel() == root.rel());
        return replacement;
    }
    std::size_t outer = root.outer().node_count();
    if (index <= outer)
        return model.join(replace_node(model, root.outer(), index - 1, replacement), root.inner(), root.op(),
                          root.card());
    return model.join(root.outer(), replace_node(model, root.inner(), index - 1 - outer, replacement), root.op(),
                      root.card());
}

} // namespace rmq
