#ifndef FRACLAB_VERSION_HPP
#define FRACLAB_VERSION_HPP

namespace fraclab {
inline constexpr const char* version_string = "fraclab 1.0.0";
}

#endif
