#include "polydisc/record.hpp"

#include "polydisc/errors.hpp"

namespace polydisc {

namespace {

bool key_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '.' ||
         c == '-';
}

bool bare_char(char c) {
  return static_cast<unsigned char>(c) > 0x20 && c != 0x7f && c != '"' && c != '\\' && c != '=';
}

}  // namespace

Record& Record::add(std::string key, std::string value) {
  if (key.empty()) throw DomainError("record: empty key");
  for (char c : key)
    if (!key_char(c)) throw DomainError("record: invalid key '" + key + "'");
  fields.emplace_back(std::move(key), std::move(value));
  return *this;
}

const std::string* Record::get(std::string_view key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return &v;
  return nullptr;
}

std::string serialize(const Record& r) {
  std::string out;
  for (const auto& [k, v] : r.fields) {
    if (!out.empty()) out += ' ';
    out += k;
    out += '=';
    bool bare = !v.empty();
    for (char c : v) bare = bare && bare_char(c);
    if (bare) {
      out += v;
      continue;
    }
    out += '"';
    for (char c : v) {
      switch (c) {
        case '"':
          out += "\\\"";
          break;
        case '\\':
          out += "\\\\";
          break;
        case '\n':
          out += "\\n";
          break;
        case '\t':
          out += "\\t";
          break;
        default:
          out += c;
      }
    }
    out += '"';
  }
  return out;
}

Record parse_record(std::string_view line) {
  Record r;
  std::size_t i = 0;
  const std::size_t n = line.size();
  while (i < n) {
    if (line[i] == ' ') {
      ++i;
      continue;
    }
    std::size_t k0 = i;
    while (i < n && key_char(line[i])) ++i;
    if (i == k0 || i >= n || line[i] != '=') throw ParseError("record: expected key=value at offset " + std::to_string(k0));
    std::string key(line.substr(k0, i - k0));
    ++i;
    std::string value;
    if (i < n && line[i] == '"') {
      ++i;
      bool closed = false;
      while (i < n) {
        char c = line[i++];
        if (c == '"') {
          closed = true;
          break;
        }
        if (c != '\\') {
          value += c;
          continue;
        }
        if (i >= n) break;
        char e = line[i++];
        if (e == 'n') {
          value += '\n';
        } else if (e == 't') {
          value += '\t';
        } else if (e == '"' || e == '\\') {
          value += e;
        } else {
          throw ParseError("record: unknown escape");
        }
      }
      if (!closed) throw ParseError("record: unterminated quoted value");
    } else {
      std::size_t v0 = i;
      while (i < n && line[i] != ' ') {
        if (!bare_char(line[i])) throw ParseError("record: invalid character in bare value");
        ++i;
      }
      value = std::string(line.substr(v0, i - v0));
    }
    if (i < n && line[i] != ' ') throw ParseError("record: expected space between fields");
    r.fields.emplace_back(std::move(key), std::move(value));
  }
  return r;
}

}  // namespace polydisc
