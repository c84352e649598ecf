#pragma once

#include <vector>

#include "rmq/costmodel/cost_model.hpp"

namespace rmq {

/// Root-level transformation rules, in enumeration order.
enum class MutationRule {
    kIdentity,
    kCommute,       // A⋈B → B⋈A
    kRotateRight,   // (A⋈B)⋈C → A⋈(B⋈C)
    kRotateLeft,    // A⋈(B⋈C) → (A⋈B)⋈C
    kExchangeLeft,  // (A⋈B)⋈C → (A⋈C)⋈B
    kExchangeRight, // A⋈(B⋈C) → B⋈(A⋈C)
    kOperator,      // other implementation at the root
};

/// Calls `emit(plan)` for the identity and every applicable rule at the root
/// of `p`.  Rules that move a join keep the operators at their node
/// positions: the new root keeps p's operator, the new child keeps the moved
/// child's operator.  Cross products are allowed.
template <typename Emit>
void for_each_mutation(const CostModel &model, const Plan &p, Emit &&emit) {
    emit(p);
    if (!p.is_join()) {
        for (OperatorId op = 0; op < model.scan_op_count(); ++op)
            if (op != p.op()) emit(model.scan(p.table(), op));
        return;
    }
    const Plan &a = p.outer();
    const Plan &b = p.inner();
    emit(model.join(b, a, p.op(), p.card()));
    if (a.is_join()) {
        // (A1⋈A2)⋈B → A1⋈(A2⋈B)
        emit(model.join(a.outer(), model.join(a.inner(), b, a.op()), p.op(), p.card()));
    }
    if (b.is_join()) {
        // A⋈(B1⋈B2) → (A⋈B1)⋈B2
        emit(model.join(model.join(a, b.outer(), b.op()), b.inner(), p.op(), p.card()));
    }
    if (a.is_join()) {
        // (A1⋈A2)⋈B → (A1⋈B)⋈A2
        emit(model.join(model.join(a.outer(), b, a.op()), a.inner(), p.op(), p.card()));
    }
    if (b.is_join()) {
        // A⋈(B1⋈B2) → B1⋈(A⋈B2)
        emit(model.join(b.outer(), model.join(a, b.inner(), b.op()), p.op(), p.card()));
    }
    for (OperatorId op = 0; op < model.join_op_count(); ++op)
        if (op != p.op()) emit(model.join(a, b, op, p.card()));
}

/// Identity plus every single root-level rule application.
std::vector<Plan> mutations(const CostModel &model, const Plan &p);

/// Replaces the node with pre-order index `index` by `replacement` (same
/// table set) and recosts the ancestors only.
Plan replace_node(const CostModel &model, const Plan &root, std::size_t index, const Plan &replacement);

/// Node with pre-order index `index`.
const Plan &node_at(const Plan &root, std::size_t index);

} // namespace rmq
