#include "sbpg/core/log.hpp"

#include <cstdlib>
#include <string>

#include <spdlog/sinks/stdout_color_sinks.h>

namespace sbpg::log {

void init_from_env() {
  // keep stdout for command output
  if (!spdlog::get("sbpg")) spdlog::set_default_logger(spdlog::stderr_color_mt("sbpg"));
  spdlog::set_level(spdlog::level::warn);
  const char* env = std::getenv("SBPG_LOG_LEVEL");
  if (env == nullptr) return;
  const auto level = spdlog::level::from_str(env);
  // from_str maps unknown names to "off"; only accept an explicit "off".
  if (level == spdlog::level::off && std::string(env) != "off") return;
  spdlog::set_level(level);
}

}  // namespace sbpg::log
