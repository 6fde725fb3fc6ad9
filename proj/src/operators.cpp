#include "splitlab/operators.hpp"

#include "splitlab/errors.hpp"

namespace splitlab {

HilbertVector resolvent_A(const HilbertVector& x) {
    return proj_V(x);
}

HilbertVector resolvent_B(const ConeApprox& cone, const HilbertVector& x, const NnlsOptions& options) {
    return proj_V(project_cone(cone, proj_V(x), options));
}

HilbertVector resolvent_B_inverse(const ConeApprox& cone, const HilbertVector& x, const NnlsOptions& options) {
    return x - resolvent_B(cone, x, options);
}

std::string_view to_string(ResolventKind kind) {
    switch (kind) {
    case ResolventKind::J_A: return "J_A";
    case ResolventKind::J_B: return "J_B";
    case ResolventKind::J_B_inverse: return "J_B_inverse";
    }
    return "unknown";
}

ResolventMap ResolventMap::J_A() {
    return ResolventMap(ResolventKind::J_A, nullptr, {});
}

ResolventMap ResolventMap::J_B(std::shared_ptr<const ConeApprox> cone, NnlsOptions options) {
    if (!cone) throw DomainError("J_B needs a cone");
    return ResolventMap(ResolventKind::J_B, std::move(cone), options);
}

ResolventMap ResolventMap::J_B_inverse(std::shared_ptr<const ConeApprox> cone, NnlsOptions options) {
    if (!cone) throw DomainError("J_B_inverse needs a cone");
    return ResolventMap(ResolventKind::J_B_inverse, std::move(cone), options);
}

HilbertVector ResolventMap::operator()(const HilbertVector& x) const {
    switch (kind_) {
    case ResolventKind::J_A: return resolvent_A(x);
    case ResolventKind::J_B: return resolvent_B(*cone_, x, options_);
    case ResolventKind::J_B_inverse: return resolvent_B_inverse(*cone_, x, options_);
    }
    throw DomainError("unknown resolvent kind");
}

HilbertVector reflected_resolvent(const ResolventMap& map, const HilbertVector& x) {
    return combine(2.0, map(x), -1.0, x);
}

} // namespace splitlab
