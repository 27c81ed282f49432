#include "socialforge/types.hpp"

namespace socialforge {

const char* to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::Follow: return "follow";
    case EdgeKind::Like: return "like";
    case EdgeKind::Retweet: return "retweet";
    case EdgeKind::Comment: return "comment";
  }
  throw_validation("unknown edge kind");
}

EdgeKind edge_kind_from_string(std::string_view s) {
  if (s == "follow") return EdgeKind::Follow;
  if (s == "like") return EdgeKind::Like;
  if (s == "retweet") return EdgeKind::Retweet;
  if (s == "comment") return EdgeKind::Comment;
  throw_validation("unknown edge kind: " + std::string(s));
}

const char* to_string(Population p) {
  return p == Population::Human ? "human" : "bot";
}

Population population_from_string(std::string_view s) {
  if (s == "human") return Population::Human;
  if (s == "bot") return Population::Bot;
  throw_validation("unknown population label: " + std::string(s));
}

}  // namespace socialforge
