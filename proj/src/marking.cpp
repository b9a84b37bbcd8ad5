#include "hog/marking.hpp"

#include "hog/baselines.hpp"
#include "hog/hog_new.hpp"

namespace hog {

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Cazaux: return "cazaux";
    case Algorithm::ParkCpr: return "parkcpr";
    case Algorithm::Khan: return "khan";
    case Algorithm::New: return "new";
    case Algorithm::Oracle: return "oracle";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::Cazaux, Algorithm::ParkCpr, Algorithm::Khan, Algorithm::New, Algorithm::Oracle})
    if (algorithm_name(a) == name) return a;
  return std::nullopt;
}

void require_markable(const OverlapTrie& t, std::string_view who) {
  if (t.kind == TrieKind::Hog) throw Error(std::string(who) + " expects an ACT or EHOG");
}

MarkVector mark_hog(Algorithm a, const OverlapTrie& t, MarkStats* stats, const MarkOptions& options) {
  switch (a) {
    case Algorithm::Cazaux: return mark_hog_cazaux(t, stats, options);
    case Algorithm::ParkCpr: return mark_hog_parkcpr(t, stats, options);
    case Algorithm::Khan: return mark_hog_khan(t, stats, options);
    case Algorithm::New: return mark_hog_new(t, stats, options);
    case Algorithm::Oracle:
      if (stats) *stats = {};
      return mark_hog_oracle(t);
  }
  throw Error("unknown algorithm");
}

}  // namespace hog
