#pragma once

#include <string>
#include <vector>

#include "ssg/image.hpp"
#include "ssg/lst.hpp"

namespace ssg {

/// All operator ids accepted by apply_method, in canonical order.
const std::vector<std::string>& method_names();

bool is_method(const std::string& name);

/// Run the named edge operator. "lst"/"lst-alt" honour cfg; "laplacian" is
/// the zero-crossing detector at threshold 0 rendered as a 0/1 response.
ResponseMap apply_method(const std::string& name, const Image& img,
                         const LstConfig& cfg = {});

}  // namespace ssg
