#include "centdian/report.hpp"

#include <algorithm>
#include <cstdio>

#include "centdian/numfmt.hpp"

namespace centdian {

std::string instance_digest(const Graph& g) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    return a.w < b.w;
  });

  std::string canon = std::to_string(g.n()) + "\n";
  for (const Edge& e : edges)
    canon += std::to_string(e.u) + " " + std::to_string(e.v) + " " +
             format_number(e.w) + "\n";

  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string join_set(const VertexSet& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

void Report::add_str(std::string key, std::string value) {
  fields_.emplace_back(std::move(key), std::move(value));
}
void Report::add_num(std::string key, Scalar value) {
  fields_.emplace_back(std::move(key), value);
}
void Report::add_int(std::string key, std::int64_t value) {
  fields_.emplace_back(std::move(key), value);
}
void Report::add_count(std::string key, std::uint64_t value) {
  fields_.emplace_back(std::move(key), value);
}
void Report::add_flag(std::string key, bool value) {
  fields_.emplace_back(std::move(key), value);
}
void Report::add_set(std::string key, VertexSet value) {
  fields_.emplace_back(std::move(key), std::move(value));
}
void Report::add_rows(std::string key, std::vector<Report> rows) {
  fields_.emplace_back(std::move(key), std::move(rows));
}
void Report::add_check(std::string name, bool ok) {
  checks_.emplace_back(std::move(name), ok);
}

std::string Report::json() const {
  std::string out = "{";
  bool first = true;
  auto emit_key = [&](const std::string& k) {
    if (!first) out += ",";
    first = false;
    out += "\"" + json_escape(k) + "\":";
  };
  for (const auto& [key, value] : fields_) {
    emit_key(key);
    if (const auto* s = std::get_if<std::string>(&value)) {
      out += "\"" + json_escape(*s) + "\"";
    } else if (const auto* d = std::get_if<Scalar>(&value)) {
      out += format_number(*d);
    } else if (const auto* i = std::get_if<std::int64_t>(&value)) {
      out += std::to_string(*i);
    } else if (const auto* u = std::get_if<std::uint64_t>(&value)) {
      out += std::to_string(*u);
    } else if (const auto* b = std::get_if<bool>(&value)) {
      out += *b ? "true" : "false";
    } else if (const auto* v = std::get_if<VertexSet>(&value)) {
      out += "[";
      for (std::size_t k = 0; k < v->size(); ++k) {
        if (k) out += ",";
        out += std::to_string((*v)[k]);
      }
      out += "]";
    } else if (const auto* rows = std::get_if<std::vector<Report>>(&value)) {
      out += "[";
      for (std::size_t k = 0; k < rows->size(); ++k) {
        if (k) out += ",";
        out += (*rows)[k].json();
      }
      out += "]";
    }
  }
  if (!checks_.empty()) {
    emit_key("checks");
    out += "{";
    for (std::size_t k = 0; k < checks_.size(); ++k) {
      if (k) out += ",";
      out += "\"" + json_escape(checks_[k].first) + "\":";
      out += checks_[k].second ? "true" : "false";
    }
    out += "}";
  }
  out += "}";
  return out;
}

std::string Report::text() const {
  std::string out;
  for (const auto& [key, value] : fields_) {
    if (const auto* s = std::get_if<std::string>(&value)) {
      out += key + ": " + *s + "\n";
    } else if (const auto* d = std::get_if<Scalar>(&value)) {
      out += key + ": " + format_number(*d) + "\n";
    } else if (const auto* i = std::get_if<std::int64_t>(&value)) {
      out += key + ": " + std::to_string(*i) + "\n";
    } else if (const auto* u = std::get_if<std::uint64_t>(&value)) {
      out += key + ": " + std::to_string(*u) + "\n";
    } else if (const auto* b = std::get_if<bool>(&value)) {
      out += key + ": " + (*b ? std::string("true") : std::string("false")) +
             "\n";
    } else if (const auto* v = std::get_if<VertexSet>(&value)) {
      out += key + ":" + (v->empty() ? "" : " " + join_set(*v)) + "\n";
    } else if (const auto* rows = std::get_if<std::vector<Report>>(&value)) {
      for (std::size_t k = 0; k < rows->size(); ++k) {
        std::string block = (*rows)[k].text();
        std::string prefix = key + "[" + std::to_string(k) + "].";
        std::size_t pos = 0;
        while (pos < block.size()) {
          const std::size_t end = block.find('\n', pos);
          out += prefix + block.substr(pos, end - pos) + "\n";
          pos = end + 1;
        }
      }
    }
  }
  for (const auto& [name, ok] : checks_)
    out += "check " + name + ": " + (ok ? "ok" : "FAIL") + "\n";
  return out;
}

}  // namespace centdian
