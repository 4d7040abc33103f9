#ifndef NMQT_CLI_VERSION_HPP
#define NMQT_CLI_VERSION_HPP

namespace nmqt::cli {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
