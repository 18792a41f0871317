#include "omegagraph/vertex_id.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

#include "omegagraph/errors.hpp"

namespace omegagraph {

VertexId VertexId::core(std::string name) {
  return VertexId{VertexKind::Core, {}, 0, 0, std::move(name)};
}

VertexId VertexId::strip(std::string strip_id, std::uint64_t period, std::string local) {
  return VertexId{VertexKind::Strip, std::move(strip_id), period, 0, std::move(local)};
}

VertexId VertexId::fan(std::string fan_id, std::uint64_t copy, std::string local) {
  return VertexId{VertexKind::Fan, std::move(fan_id), 0, copy, std::move(local)};
}

VertexId VertexId::periodic_fan(std::string strip_id, std::uint64_t period, std::uint64_t copy,
                                std::string local) {
  return VertexId{VertexKind::PeriodicFan, std::move(strip_id), period, copy, std::move(local)};
}

std::string VertexId::token() const {
  switch (kind) {
    case VertexKind::Core:
      return "core:" + local;
    case VertexKind::Strip:
      return "strip:" + owner + "/" + std::to_string(period) + "/" + local;
    case VertexKind::Fan:
      return "fan:" + owner + "/" + std::to_string(copy) + "/" + local;
    case VertexKind::PeriodicFan:
      return "pfan:" + owner + "/" + std::to_string(period) + "/" + std::to_string(copy) + "/" +
             local;
  }
  return {};
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::uint64_t parse_index(std::string_view text, std::string_view token) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw Error(ErrorKind::ParseError, "bad index '" + std::string(text) + "' in vertex token '" +
                                           std::string(token) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

VertexId VertexId::parse(std::string_view raw) {
  const auto token = trim(raw);
  const auto colon = token.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::ParseError, "vertex token '" + std::string(token) + "' lacks a kind prefix");
  }
  const auto kind = token.substr(0, colon);
  const auto parts = split(token.substr(colon + 1), '/');
  auto bad_arity = [&] {
    return Error(ErrorKind::ParseError, "wrong number of fields in vertex token '" +
                                            std::string(token) + "'");
  };
  for (auto p : parts) {
    if (p.empty()) throw Error(ErrorKind::ParseError, "empty field in vertex token '" + std::string(token) + "'");
  }
  if (kind == "core") {
    if (parts.size() != 1) throw bad_arity();
    return core(std::string(parts[0]));
  }
  if (kind == "strip") {
    if (parts.size() != 3) throw bad_arity();
    return strip(std::string(parts[0]), parse_index(parts[1], token), std::string(parts[2]));
  }
  if (kind == "fan") {
    if (parts.size() != 3) throw bad_arity();
    return fan(std::string(parts[0]), parse_index(parts[1], token), std::string(parts[2]));
  }
  if (kind == "pfan") {
    if (parts.size() != 4) throw bad_arity();
    return periodic_fan(std::string(parts[0]), parse_index(parts[1], token),
                        parse_index(parts[2], token), std::string(parts[3]));
  }
  throw Error(ErrorKind::ParseError, "unknown vertex kind '" + std::string(kind) + "' in '" +
                                         std::string(token) + "'");
}

std::string to_token(const VertexSet& set) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : set) {
    if (!first) out += ",";
    first = false;
    out += v.token();
  }
  out += "}";
  return out;
}

VertexSet parse_vertex_set(std::string_view text) {
  auto body = trim(text);
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') {
      throw Error(ErrorKind::ParseError, "unbalanced braces in vertex set '" + std::string(text) + "'");
    }
    body = trim(body.substr(1, body.size() - 2));
  }
  VertexSet out;
  if (body.empty()) return out;
  for (auto part : split(body, ',')) out.insert(VertexId::parse(part));
  return out;
}

bool is_subset(const VertexSet& sub, const VertexSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

}  // namespace omegagraph
