#ifndef AGR_VERSION_HPP
#define AGR_VERSION_HPP

namespace agr {

inline constexpr const char* kEngineName = "agr";
inline constexpr const char* kEngineVersion = "0.1.0";

} // namespace agr

#endif
