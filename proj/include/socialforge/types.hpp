#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace socialforge {

/// Dense node index in [0, node_count).
using NodeId = std::uint32_t;

/// Follow edges form the topology; the other three kinds annotate an
/// existing follow edge.
enum class EdgeKind : std::uint8_t { Follow = 0, Like = 1, Retweet = 2, Comment = 3 };

const char* to_string(EdgeKind k);
EdgeKind edge_kind_from_string(std::string_view s);

enum class Population : std::uint8_t { Human = 0, Bot = 1 };

const char* to_string(Population p);
Population population_from_string(std::string_view s);

/// Error categories; values double as process exit codes.
enum class ErrorCode : int { Validation = 1, Runtime = 2, Partial = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_validation(const std::string& what) {
  throw Error(ErrorCode::Validation, what);
}

[[noreturn]] inline void throw_runtime(const std::string& what) {
  throw Error(ErrorCode::Runtime, what);
}

}  // namespace socialforge
