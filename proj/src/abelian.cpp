#include "frobkit/abelian.hpp"

namespace frobkit {

GroupPtr AbelianGroup::cokernel(const IntMatrix& relations) {
    auto g = std::shared_ptr<AbelianGroup>(new AbelianGroup());
    g->generators_ = relations.cols();
    g->relations_ = relations;
    g->snf_ = smith_normal_form(relations);

    // Z^c / rowspan(A): with U A V = S the substitution w = V^T v turns the
    // relation lattice into the diagonal lattice spanned by the d_i e_i.
    const auto diag = g->snf_.diagonal();
    const size_t c = relations.cols();
    for (size_t i = 0; i < c; ++i) {
        BigInt d = i < diag.size() ? diag[i] : BigInt(0);
        if (d == 1) continue;  // trivial slot
        g->moduli_.push_back(d);
        g->red_.push_back(g->snf_.v.column(i));
        if (d == 0)
            ++g->free_rank_;
        else
            g->torsion_.push_back(d);
    }
    return g;
}

GroupElement AbelianGroup::reduce(const IntVec& v) const {
    if (v.size() != generators_)
        throw InputError("reduce: vector length " + std::to_string(v.size()) +
                         " != generator count " + std::to_string(generators_));
    IntVec coords(moduli_.size());
    for (size_t k = 0; k < moduli_.size(); ++k) {
        BigInt w = dot(red_[k], v);
        coords[k] = moduli_[k] == 0 ? w : floor_mod(w, moduli_[k]);
    }
    return GroupElement(shared_from_this(), std::move(coords));
}

IntVec AbelianGroup::canonicalize(IntVec coords) const {
    if (coords.size() != moduli_.size()) throw InputError("canonicalize: slot mismatch");
    for (size_t k = 0; k < moduli_.size(); ++k)
        if (moduli_[k] != 0) coords[k] = floor_mod(coords[k], moduli_[k]);
    return coords;
}

GroupElement GroupElement::operator+(const GroupElement& o) const {
    if (!group_ || group_ != o.group_) throw InputError("element addition across groups");
    IntVec c(coords_.size());
    for (size_t k = 0; k < coords_.size(); ++k) c[k] = coords_[k] + o.coords_[k];
    return GroupElement(group_, group_->canonicalize(std::move(c)));
}

GroupElement GroupElement::operator-() const {
    IntVec c(coords_.size());
    for (size_t k = 0; k < coords_.size(); ++k) c[k] = -coords_[k];
    return GroupElement(group_, group_->canonicalize(std::move(c)));
}

GroupElement GroupElement::operator*(const BigInt& k) const {
    IntVec c(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i) c[i] = coords_[i] * k;
    return GroupElement(group_, group_->canonicalize(std::move(c)));
}

IntVec GroupElement::free_part() const {
    const auto& mod = group_->slot_moduli();
    IntVec f;
    f.reserve(group_->free_rank());
    for (size_t k = 0; k < mod.size(); ++k)
        if (mod[k] == 0) f.push_back(coords_[k]);
    return f;
}

bool is_torsion(const GroupElement& x) {
    for (const auto& c : x.free_part())
        if (c != 0) return false;
    return true;
}

}  // namespace frobkit
