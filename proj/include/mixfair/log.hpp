#pragma once

#include <string>

namespace mixfair::log {

enum class Level { Quiet = 0, Info = 1, Debug = 2 };

// Parsed once from MIXFAIR_LOG ("info" / "debug"; anything else is quiet).
Level level();

void info(const std::string& msg);
void debug(const std::string& msg);

}  // namespace mixfair::log
