#include "rmq/optimizer/random_plan.hpp"

#include <algorithm>
#include <numeric>

namespace rmq {

namespace {

struct Shape {
    std::vector<int> left;
    std::vector<int> right;
    std::vector<TableId> label;
};

Plan build(const CostModel &model, const Shape &s, int node, Rng &rng) {
    if (s.left[node] < 0) {
        std::uniform_int_distribution<int> op(0, static_cast<int>(model.scan_op_count()) - 1);
        return model.scan(s.label[node], static_cast<OperatorId>(op(rng)));
    }
    Plan outer = build(model, s, s.left[node], rng);
    Plan inner = build(model, s, s.right[node], rng);
    std::uniform_int_distribution<int> op(0, static_cast<int>(model.join_op_count()) - 1);
    return model.join(outer, inner, static_cast<OperatorId>(op(rng)));
}

} // namespace

Plan random_plan(const CostModel &model, Rng &rng) {
    const int n = static_cast<int>(model.table_count());
    const int total = 2 * n - 1;
    Shape s{std::vector<int>(total, -1), std::vector<int>(total, -1), std::vector<TableId>(total, 0)};
    std::vector<int> parent(total, -1);

    // Rémy: pick a uniform node, splice a new inner node above it and hang a
    // fresh leaf on a uniformly chosen side.
    int root = 0;
    int count = 1;
    std::bernoulli_distribution coin(0.5);
    for (int k = 1; k < n; ++k) {
        int x = std::uniform_int_distribution<int>(0, count - 1)(rng);
        int inner = count++;
        int leaf = count++;
        int par = parent[x];
        if (par < 0)
            root = inner;
        else if (s.left[par] == x)
            s.left[par] = inner;
        else
            s.right[par] = inner;
        parent[inner] = par;
        if (coin(rng)) {
            s.left[inner] = x;
            s.right[inner] = leaf;
        } else {
            s.left[inner] = leaf;
            s.right[inner] = x;
        }
        parent[x] = inner;
        parent[leaf] = inner;
    }

    std::vector<TableId> perm(n);
    std::iota(perm.begin(), perm.end(), TableId{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    int next = 0;
    for (int v = 0; v < total; ++v)
        if (s.left[v] < 0) s.label[v] = perm[next++];

    return build(model, s, root, rng);
}

} // namespace rmq
