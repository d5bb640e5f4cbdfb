#pragma once

#include <stdexcept>
#include <vector>

#include "dunkl/linalg.hpp"

namespace dunkl {

struct UnrepresentableRotation : std::runtime_error {
    explicit UnrepresentableRotation(std::string what)
        : std::runtime_error(std::move(what)) {}
};

/// cleared-denominator form of the m-term plane identity
///   sum_{j=0}^{m-2} 1/(<x,v_j><x,v_{j+1}>)  =  1/(<x,v_{m-1}><x,v_0>)
/// checked as an exact polynomial identity in the ambient coordinates
bool vxrho_sequence_identity(const std::vector<Vec>& vs);

/// ambient matrix of a plane rotation rho with rho^m = -I on its plane, for
/// m in {2, 3, 5}; m = 4 and m = 6 would need sqrt2 / sqrt3 coordinates and
/// throw UnrepresentableRotation
Mat make_plane_rotation(int m);

/// validates v rho^m = -v, builds v_j = v rho^j and runs the identity
bool vxrho_identity_check(const Vec& v, const Mat& rho, int m);

}  // namespace dunkl
