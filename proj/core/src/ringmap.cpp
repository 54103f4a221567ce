#include "gmr/ringmap.hpp"

namespace gmr {

RingMap::RingMap(ContextRing::Ptr source, ContextRing::Ptr target, std::vector<Elem> table)
    : src_(std::move(source)), dst_(std::move(target)), table_(std::move(table)) {
    const FinRing& A = *src_->ring();
    const FinRing& B = *dst_->ring();
    if (table_.size() != A.order()) throw WiringError("ring map table has wrong size");
    for (Elem v : table_)
        if (v >= B.order()) throw WiringError("ring map entry out of range");

    additive_ = true;
    for (Elem x = 0; x < A.order() && additive_; ++x)
        for (Elem y = 0; y < A.order(); ++y)
            if (table_[A.add(x, y)] != B.add(table_[x], table_[y])) {
                additive_ = false;
                break;
            }

    multiplicative_ = true;
    for (Elem x = 0; x < A.order() && multiplicative_; ++x)
        for (Elem y = 0; y < A.order(); ++y)
            if (table_[A.mul(x, y)] != B.mul(table_[x], table_[y])) {
                multiplicative_ = false;
                break;
            }

    unital_ = table_[A.one()] == B.one();

    bijective_ = A.order() == B.order();
    if (bijective_) {
        std::vector<char> hit(B.order(), 0);
        for (Elem v : table_) {
            if (hit[v]) {
                bijective_ = false;
                break;
            }
            hit[v] = 1;
        }
    }

    auto image_within = [&](int i, int j) {
        for (Elem x : src_->homogeneous_component(i))
            if (!dst_->in_component(table_[x], j)) return false;
        return true;
    };
    grades_.semigraded = image_within(1, 1) && image_within(-1, -1);
    grades_.antisemigraded = image_within(1, -1) && image_within(-1, 1);
    bool diag_kept = image_within(0, 0);
    grades_.graded = grades_.semigraded && diag_kept;
    grades_.antigraded = grades_.antisemigraded && diag_kept;
}

RingMap RingMap::identity(const ContextRing::Ptr& T) {
    std::vector<Elem> t(T->order());
    for (Elem x = 0; x < T->order(); ++x) t[x] = x;
    return RingMap(T, T, std::move(t));
}

RingMap RingMap::from_ring_iso(const ContextRing::Ptr& source, const ContextRing::Ptr& target,
                               const RingIso& iso) {
    if (iso.source() != source->ring() || iso.target() != target->ring())
        throw WiringError("ring isomorphism endpoints do not match the context rings");
    return RingMap(source, target, iso.table());
}

RingMap RingMap::inverse() const {
    if (!is_isomorphism()) throw WiringError("cannot invert a non-isomorphism");
    std::vector<Elem> t(table_.size());
    for (Elem x = 0; x < table_.size(); ++x) t[table_[x]] = x;
    return RingMap(dst_, src_, std::move(t));
}

RingMap compose(const RingMap& f, const RingMap& g) {
    if (f.target() != g.source())
        throw WiringError("ring map composition endpoints do not match");
    std::vector<Elem> t(f.table().size());
    for (Elem x = 0; x < t.size(); ++x) t[x] = g(f(x));
    return RingMap(f.source(), g.target(), std::move(t));
}

RingMap swap_iso(const ContextRing::Ptr& T) {
    auto Tinv = ContextRing::build(context_transpose(T->context()));
    std::vector<Elem> t(T->order());
    for (Elem x = 0; x < T->order(); ++x) {
        auto q = T->split(x);
        t[x] = Tinv->fuse(q.s, q.n, q.m, q.r);
    }
    return RingMap(T, Tinv, std::move(t));
}

}  // namespace gmr
