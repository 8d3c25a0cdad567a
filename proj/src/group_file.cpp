#include "symquot/group_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "symquot/error.hpp"

namespace symquot {

namespace {

struct Line {
  std::size_t number;
  std::string text;    // comment stripped
  std::size_t indent;  // 0-based offset of the first non-blank character
};

std::string_view trim(std::string_view s, std::size_t* offset = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  std::size_t e = s.size();
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  if (offset) *offset = b;
  return s.substr(b, e - b);
}

std::vector<Line> meaningful_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t indent = 0;
    std::string_view body = trim(raw, &indent);
    if (!body.empty()) out.push_back({number, std::string(raw), indent});
    pos = end + 1;
  }
  return out;
}

std::size_t parse_count(std::string_view value, const Line& line, std::size_t column, const char* key) {
  std::size_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ParseError(std::string(key) + " must be a nonnegative integer", line.number, column);
  }
  return out;
}

}  // namespace

GroupFile parse_group_file(std::string_view text) {
  GroupFile f;
  bool have_dimension = false;
  const auto lines = meaningful_lines(text);
  std::size_t i = 0;
  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string_view body = trim(line.text);
    const auto colon = body.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'key: value'", line.number, line.indent + 1);
    const std::string_view key = trim(body.substr(0, colon));
    std::size_t value_offset = 0;
    const std::string_view value = trim(body.substr(colon + 1), &value_offset);
    const std::size_t value_column = line.indent + colon + 1 + value_offset + 1;
    if (key == "generator") {
      if (!value.empty()) throw ParseError("unexpected text after 'generator:'", line.number, value_column);
      break;
    }
    if (key == "name") {
      f.name = std::string(value);
    } else if (key == "conductor") {
      if (!value.empty() && value[0] == '-') throw ParseError("conductor must be at least 1", line.number, value_column);
      const std::size_t c = parse_count(value, line, value_column, "conductor");
      if (c < 1) throw ParseError("conductor must be at least 1", line.number, value_column);
      if (c > 1000) throw ParseError("conductor exceeds 1000", line.number, value_column);
      f.conductor = static_cast<int>(c);
    } else if (key == "dimension") {
      f.dimension = parse_count(value, line, value_column, "dimension");
      have_dimension = true;
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", line.number, line.indent + 1);
    }
  }
  if (!have_dimension) throw ParseError("missing 'dimension:'", lines.empty() ? 0 : lines.back().number, 0);

  while (i < lines.size()) {
    const Line& header = lines[i++];
    if (trim(header.text) != "generator:") {
      throw ParseError("expected 'generator:'", header.number, header.indent + 1);
    }
    std::vector<Cyclotomic> entries;
    for (std::size_t r = 0; r < f.dimension; ++r) {
      if (i >= lines.size() || trim(lines[i].text) == "generator:") {
        throw ParseError("generator has " + std::to_string(r) + " rows, expected " + std::to_string(f.dimension),
                         header.number, header.indent + 1);
      }
      const Line& row = lines[i++];
      std::size_t start = 0;
      std::size_t cols = 0;
      for (;;) {
        std::size_t comma = row.text.find(',', start);
        const std::size_t stop = comma == std::string::npos ? row.text.size() : comma;
        std::size_t lead = 0;
        const std::string_view cell = trim(std::string_view(row.text).substr(start, stop - start), &lead);
        const std::size_t column = start + lead + 1;
        if (cell.empty()) throw ParseError("empty matrix entry", row.number, column);
        try {
          entries.push_back(Cyclotomic::parse(cell, f.conductor));
        } catch (const ParseError& e) {
          throw ParseError("malformed literal '" + std::string(cell) + "'", row.number,
                           column + (e.column() > 0 ? e.column() - 1 : 0));
        }
        ++cols;
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (cols != f.dimension) {
        throw ParseError("row has " + std::to_string(cols) + " entries, expected " + std::to_string(f.dimension),
                         row.number, row.indent + 1);
      }
    }
    f.generators.emplace_back(f.dimension, f.dimension, std::move(entries), f.conductor);
  }
  return f;
}

std::string serialize_group_file(const GroupFile& f) {
  std::ostringstream out;
  if (!f.name.empty()) out << "name: " << f.name << '\n';
  out << "conductor: " << f.conductor << '\n';
  out << "dimension: " << f.dimension << '\n';
  for (const auto& g : f.generators) {
    out << "generator:\n";
    const Matrix m = g.embed(f.conductor);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      out << "  ";
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (c > 0) out << ", ";
        out << m(r, c).format();
      }
      out << '\n';
    }
  }
  return out.str();
}

GroupFile load_group_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open group file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_file(buf.str());
}

Representation to_representation(const GroupFile& f, std::size_t max_order) {
  return {f.name.empty() ? "group" : f.name,
          MatrixGroup::close(f.dimension, f.generators, max_order, f.conductor)};
}

}  // namespace symquot
