#pragma once

#include <memory>
#include <string_view>

#include "splitlab/cone.hpp"
#include "splitlab/hilbert.hpp"

namespace splitlab {

// A is the normal-cone operator of V, B = T^{-1} - Id with
// T = proj_V o proj_K o proj_V. Hence
//   J_A = proj_V,   J_B = T,   J_{B^{-1}} = Id - J_B.
// The set-valued operators themselves are never represented.

HilbertVector resolvent_A(const HilbertVector& x);
HilbertVector resolvent_B(const ConeApprox& cone, const HilbertVector& x, const NnlsOptions& options = {});
HilbertVector resolvent_B_inverse(const ConeApprox& cone, const HilbertVector& x, const NnlsOptions& options = {});

enum class ResolventKind { J_A, J_B, J_B_inverse };

std::string_view to_string(ResolventKind kind);

/// Single-valued firmly nonexpansive map tagged by which resolvent it is.
/// J_B and J_B_inverse keep a shared handle on the cone they were built with.
class ResolventMap {
public:
    static ResolventMap J_A();
    static ResolventMap J_B(std::shared_ptr<const ConeApprox> cone, NnlsOptions options = {});
    static ResolventMap J_B_inverse(std::shared_ptr<const ConeApprox> cone, NnlsOptions options = {});

    ResolventKind kind() const { return kind_; }
    const ConeApprox* cone() const { return cone_.get(); }

    HilbertVector operator()(const HilbertVector& x) const;

private:
    ResolventMap(ResolventKind kind, std::shared_ptr<const ConeApprox> cone, NnlsOptions options)
        : kind_(kind), cone_(std::move(cone)), options_(options) {}

    ResolventKind kind_;
    std::shared_ptr<const ConeApprox> cone_;
    NnlsOptions options_;
};

// 2 M(x) - x
HilbertVector reflected_resolvent(const ResolventMap& map, const HilbertVector& x);

} // namespace splitlab
