// Copyright 2026 The tbtrellis Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tbt/io.hpp"

#include <optional>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace tbt {
namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

bool skippable(const std::string& line) {
  if (line.empty()) return true;
  if (line[0] == '#') return true;
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

[[noreturn]] void fail_at(std::size_t line, std::size_t col,
                          const std::string& msg) {
  throw parse_error("line " + std::to_string(line) + ", column " +
                    std::to_string(col) + ": " + msg);
}

}  // namespace

ParityCheckMatrix parse_matrix_file(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  std::size_t ln = 0;
  auto next_line = [&]() -> const std::string* {
    while (ln < lines.size() && skippable(lines[ln])) ++ln;
    if (ln == lines.size()) return nullptr;
    return &lines[ln++];
  };

  const std::string* header = next_line();
  if (!header) fail_at(1, 1, "missing header line \"q r n\"");
  std::size_t header_ln = ln;  // 1-based line of the header
  unsigned long q = 0, r = 0, n = 0;
  {
    std::istringstream is(*header);
    std::string extra;
    if (!(is >> q >> r >> n)) fail_at(header_ln, 1, "header must be \"q r n\"");
    if (is >> extra) fail_at(header_ln, 1, "trailing tokens after header");
  }
  if (q > 10) fail_at(header_ln, 1, "modulus too large for the digit format");
  std::optional<Field> f;
  try {
    f.emplace(static_cast<unsigned>(q));
  } catch (const precondition_error&) {
    fail_at(header_ln, 1, "modulus " + std::to_string(q) + " is not prime");
  }
  if (r == 0 || n == 0) fail_at(header_ln, 1, "row and column counts must be positive");

  Mat m(*f, r, n);
  for (std::size_t row = 0; row < r; ++row) {
    const std::string* data = next_line();
    if (!data) fail_at(lines.size() + 1, 1, "missing matrix row");
    std::size_t row_ln = ln;
    std::string trimmed = *data;
    while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' '))
      trimmed.pop_back();
    if (trimmed.size() != n) {
      fail_at(row_ln, trimmed.size() + 1,
              "expected exactly " + std::to_string(n) + " digits");
    }
    for (std::size_t c = 0; c < n; ++c) {
      char ch = trimmed[c];
      if (ch < '0' || ch > '9' || static_cast<unsigned long>(ch - '0') >= q) {
        fail_at(row_ln, c + 1, "bad digit '" + std::string(1, ch) + "'");
      }
      m.set(row, c, static_cast<std::uint8_t>(ch - '0'));
    }
  }
  if (const std::string* extra = next_line()) {
    (void)extra;
    fail_at(ln, 1, "unexpected content after the last row");
  }
  return ParityCheckMatrix{m};
}

std::string emit_matrix_file(const ParityCheckMatrix& h) {
  std::ostringstream os;
  os << h.field().q() << ' ' << h.rows() << ' ' << h.cols() << '\n';
  for (std::size_t r = 0; r < h.rows(); ++r) {
    os << h.mat.row(r).digits() << '\n';
  }
  return std::move(os).str();
}

std::string emit_trellis_document(const Trellis& t) {
  nlohmann::ordered_json doc;
  doc["q"] = t.field().q();
  doc["depth"] = t.depth();
  doc["tail_biting"] = t.tail_biting();
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < t.num_classes(); ++c) {
    nlohmann::ordered_json cls = nlohmann::ordered_json::array();
    for (const Vec& l : t.class_labels(c)) cls.push_back(l.digits());
    classes.push_back(std::move(cls));
  }
  doc["classes"] = std::move(classes);
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (std::size_t s = 0; s < t.depth(); ++s) {
    std::size_t target = t.section_target(s);
    for (const TrellisEdge& e : t.section(s)) {
      edges.push_back({s, t.label(s, e.from).digits(), e.symbol,
                       t.label(target, e.to).digits()});
    }
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

Trellis parse_trellis_document(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  try {
    unsigned q = doc.at("q").get<unsigned>();
    std::size_t depth = doc.at("depth").get<std::size_t>();
    bool tail_biting = doc.at("tail_biting").get<bool>();
    std::optional<Field> f;
    try {
      f.emplace(q);
    } catch (const precondition_error&) {
      throw parse_error("modulus " + std::to_string(q) + " is not prime");
    }
    const auto& classes = doc.at("classes");
    std::size_t expected = tail_biting ? depth : depth + 1;
    if (classes.size() != expected) {
      throw parse_error("expected " + std::to_string(expected) +
                        " vertex classes");
    }
    std::size_t label_len = 0;
    bool have_len = false;
    for (const auto& cls : classes) {
      for (const auto& l : cls) {
        std::string s = l.get<std::string>();
        if (!have_len) {
          label_len = s.size();
          have_len = true;
        } else if (s.size() != label_len) {
          throw parse_error("vertex labels must share one length");
        }
      }
    }
    if (!have_len || label_len == 0) {
      throw parse_error("trellis document has no labeled vertices");
    }
    TrellisBuilder builder(*f, depth, tail_biting, label_len);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (const auto& l : classes[c]) {
        builder.add_vertex(c, Vec::from_digits(*f, l.get<std::string>()));
      }
    }
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 4) {
        throw parse_error("edges must be [section, from, symbol, to]");
      }
      std::size_t section = e[0].get<std::size_t>();
      if (section >= depth) throw parse_error("edge section out of range");
      unsigned symbol = e[2].get<unsigned>();
      if (symbol >= q) throw parse_error("edge symbol out of range");
      Vec from = Vec::from_digits(*f, e[1].get<std::string>());
      Vec to = Vec::from_digits(*f, e[3].get<std::string>());
      builder.add_edge(section, from, static_cast<std::uint8_t>(symbol), to);
    }
    return std::move(builder).build();
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad trellis document: ") + e.what());
  } catch (const precondition_error& e) {
    throw parse_error(std::string("bad trellis document: ") + e.what());
  }
}

std::string to_dot(const Trellis& t) {
  std::ostringstream os;
  os << "digraph trellis {\n  rankdir=LR;\n";
  for (std::size_t c = 0; c < t.num_classes(); ++c) {
    os << "  { rank=same;";
    for (const Vec& l : t.class_labels(c)) {
      os << " \"" << c << ':' << l.digits() << "\";";
    }
    os << " }\n";
  }
  for (std::size_t s = 0; s < t.depth(); ++s) {
    std::size_t target = t.section_target(s);
    for (const TrellisEdge& e : t.section(s)) {
      os << "  \"" << s << ':' << t.label(s, e.from).digits() << "\" -> \""
         << target << ':' << t.label(target, e.to).digits() << "\" [label=\""
         << static_cast<unsigned>(e.symbol) << "\"];\n";
    }
  }
  os << "}\n";
  return std::move(os).str();
}

}  // namespace tbt
