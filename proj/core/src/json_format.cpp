#include "orbitkit/json_format.hpp"

#include <cmath>
#include <cstdio>

namespace orbitkit {

namespace {

void write(const nlohmann::ordered_json& v, int indent, int depth, std::string& out) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (v.type()) {
    case nlohmann::ordered_json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += nlohmann::ordered_json(key).dump();
        out += indent < 0 ? ":" : ": ";
        write(item, indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case nlohmann::ordered_json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line; nested structures are indented.
      bool scalar = true;
      for (const auto& item : v) scalar = scalar && !item.is_structured();
      out += '[';
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += (scalar && indent >= 0) ? ", " : ",";
        first = false;
        if (!scalar) newline(depth + 1);
        write(item, indent, depth + 1, out);
      }
      if (!scalar) newline(depth);
      out += ']';
      return;
    }
    case nlohmann::ordered_json::value_t::number_float: {
      const double d = v.get<double>();
      if (!std::isfinite(d)) {
        out += "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", d);
      out += buf;
      return;
    }
    default:
      out += v.dump();
      return;
  }
}

}  // namespace

std::string dump_json(const nlohmann::ordered_json& value, int indent) {
  std::string out;
  write(value, indent, 0, out);
  return out;
}

}  // namespace orbitkit
