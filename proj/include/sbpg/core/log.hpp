#pragma once

#include <spdlog/spdlog.h>

namespace sbpg::log {

/// Reads SBPG_LOG_LEVEL (trace|debug|info|warn|error|off) once and applies it
/// to the default spdlog logger. Unknown values leave the level at "warn".
void init_from_env();

}  // namespace sbpg::log
