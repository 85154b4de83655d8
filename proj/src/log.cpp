#include "mixfair/log.hpp"

#include <cstdlib>
#include <iostream>

namespace mixfair::log {

Level level() {
  static const Level lvl = [] {
    const char* env = std::getenv("MIXFAIR_LOG");
    if (env == nullptr) return Level::Quiet;
    std::string v(env);
    if (v == "debug") return Level::Debug;
    if (v == "info") return Level::Info;
    return Level::Quiet;
  }();
  return lvl;
}

void info(const std::string& msg) {
  if (level() >= Level::Info) std::cerr << "[mixfair] " << msg << "\n";
}

void debug(const std::string& msg) {
  if (level() >= Level::Debug) std::cerr << "[mixfair:debug] " << msg << "\n";
}

}  // namespace mixfair::log
