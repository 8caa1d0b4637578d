#pragma once

#include <string>

namespace rado::log {

enum class Level { Quiet, Info, Debug };

/// Read once from RADO_LOG (quiet, info, debug); defaults to quiet.
Level level();
void set_level(Level level);

void info(const std::string& message);
void debug(const std::string& message);

}  // namespace rado::log
