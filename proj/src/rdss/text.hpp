#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace rdss {

/// Calls `visit(line_no, tokens)` for every non-blank, non-comment line (1-based numbering).
template <class Visit>
void for_each_token_line(std::string_view text, Visit&& visit) {
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::istringstream is{std::string(text.substr(pos, nl - pos))};
    pos = nl + 1;
    ++line_no;
    std::vector<std::string> tok;
    for (std::string t; is >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    visit(line_no, tok);
  }
}

}  // namespace rdss
