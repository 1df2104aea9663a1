#include "ssg/methods.hpp"

#include <algorithm>

#include "ssg/baselines.hpp"
#include "ssg/errors.hpp"

namespace ssg {

const std::vector<std::string>& method_names() {
    static const std::vector<std::string> names{
        "lst", "lst-alt", "sobel", "prewitt", "kirsch", "sis", "laplacian"};
    return names;
}

bool is_method(const std::string& name) {
    const auto& names = method_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

ResponseMap apply_method(const std::string& name, const Image& img,
                         const LstConfig& cfg) {
    if (name == "lst") {
        LstConfig c = cfg;
        c.alternate_form = false;
        return local_stimuli(img, c);
    }
    if (name == "lst-alt") {
        LstConfig c = cfg;
        c.alternate_form = true;
        return local_stimuli(img, c);
    }
    if (name == "sobel") return sobel(img);
    if (name == "prewitt") return prewitt(img);
    if (name == "kirsch") return kirsch(img);
    if (name == "sis") return sis(img);
    if (name == "laplacian") {
        const BinaryMap zc = laplacian_zero_cross(img, 0.0);
        ResponseMap out{Image(zc.width, zc.height), "laplacian"};
        for (std::size_t i = 0; i < zc.bits.size(); ++i) {
            out.values.pixels()[i] = zc.bits[i] ? 1.0 : 0.0;
        }
        return out;
    }
    throw Error("unknown method '" + name + "'");
}

}  // namespace ssg
