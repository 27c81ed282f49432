#pragma once

#include <string>

namespace socialforge {

// Log level is read once from the SOCIALFORGE_LOG environment variable
// (error, warn, info, debug). Default is warn.
enum class LogLevel : int { Error = 0, Warn = 1, Info = 2, Debug = 3 };

LogLevel log_level();
bool log_enabled(LogLevel level);
void log_message(LogLevel level, const std::string& message);

}  // namespace socialforge
