#include "sunsys/certificate.hpp"

#include <sstream>

#include "json.hpp"
#include "sunsys/errors.hpp"

namespace sunsys {

using nlohmann::json;

namespace {

json vertex_json(const vertex& v) {
  switch (v.kind) {
    case vertex_kind::inf:
      return json::array({"inf", v.index});
    case vertex_kind::inf_primed:
      return json::array({"inf'", v.index});
    case vertex_kind::point:
      break;
  }
  json coords = json::array();
  for (std::size_t i = 0; i < v.elem.n; ++i) coords.push_back(v.elem.c[i]);
  return json::array({"p", coords, v.level});
}

json host_json(const host_graph& h) {
  switch (h.type()) {
    case host_graph::kind::complete:
      return json{{"complete", h.param()}};
    case host_graph::kind::multipartite:
      return json{{"multipartite", json::array({h.param(), h.param2()})}};
    case host_graph::kind::plus:
      if (h.inner().type() == host_graph::kind::complete)
        return json{{"complete_plus", json{{"complete", h.inner().param()}, {"w", h.param()}}}};
      return json{{"plus", json{{"inner", host_json(h.inner())}, {"w", h.param()}}}};
    case host_graph::kind::blowup:
      return json{{"blowup", json{{"inner", host_json(h.inner())}, {"one_factor", h.with_one_factor()}}}};
    case host_graph::kind::diff: {
      const diff_spec& d = h.spec();
      json sets = json::array();
      for (const auto& [key, ds] : d.entries()) {
        json elems = json::array();
        for (const auto& x : ds) {
          json c = json::array();
          for (std::size_t i = 0; i < x.n; ++i) c.push_back(x.c[i]);
          elems.push_back(c);
        }
        sets.push_back(json::array({key.first, key.second, elems}));
      }
      return json{{"diff", json{{"group", d.group().factors()}, {"levels", d.levels()}, {"sets", sets}}}};
    }
  }
  return json();
}

[[noreturn]] void fail(const std::string& msg) { throw parse_error("certificate: " + msg); }

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

vertex parse_vertex(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_string()) fail("bad vertex encoding " + j.dump());
  const std::string tag = j[0].get<std::string>();
  if (tag == "inf" || tag == "inf'") {
    if (j.size() != 2) fail("bad infinity encoding " + j.dump());
    const int idx = as_int(j[1], "infinity index");
    if (idx < 1) fail("infinity index must be positive");
    return tag == "inf" ? vertex::inf(idx) : vertex::inf_primed(idx);
  }
  if (tag != "p" || j.size() != 3 || !j[1].is_array()) fail("bad point encoding " + j.dump());
  if (j[1].empty() || j[1].size() > max_factors) fail("bad coordinate count " + j.dump());
  group_element e;
  e.n = static_cast<std::uint8_t>(j[1].size());
  for (std::size_t i = 0; i < j[1].size(); ++i) e.c[i] = as_int(j[1][i], "coordinate");
  return vertex::point(e, as_int(j[2], "level"));
}

host_graph parse_host(const json& j) {
  if (!j.is_object() || j.size() != 1) fail("host must be a single-key object");
  const std::string key = j.begin().key();
  const json& val = j.begin().value();
  try {
    if (key == "complete") return host_graph::complete(as_int(val, "complete"));
    if (key == "complete_plus")
      return host_graph::complete_plus(as_int(val.at("complete"), "complete"), as_int(val.at("w"), "w"));
    if (key == "multipartite") {
      if (!val.is_array() || val.size() != 2) fail("multipartite needs [g,h]");
      return host_graph::multipartite(as_int(val[0], "g"), as_int(val[1], "h"));
    }
    if (key == "plus") return host_graph::plus(parse_host(val.at("inner")), as_int(val.at("w"), "w"));
    if (key == "blowup") {
      if (!val.at("one_factor").is_boolean()) fail("one_factor must be boolean");
      return host_graph::blowup(parse_host(val.at("inner")), val.at("one_factor").get<bool>());
    }
    if (key == "diff") {
      const group_spec g(val.at("group").get<std::vector<int>>());
      diff_spec d(g, as_int(val.at("levels"), "levels"));
      for (const auto& entry : val.at("sets")) {
        if (!entry.is_array() || entry.size() != 3) fail("bad difference set entry");
        const int a = as_int(entry[0], "level");
        const int b = as_int(entry[1], "level");
        for (const auto& x : entry[2]) {
          std::vector<long long> coords = x.get<std::vector<long long>>();
          group_element e = g.reduce(coords);
          d.add(a, b, e);
        }
      }
      return host_graph::diff(d);
    }
  } catch (const json::exception& e) {
    fail(std::string("malformed host: ") + e.what());
  } catch (const parse_error&) {
    throw;
  } catch (const error& e) {
    fail(std::string("invalid host: ") + e.what());
  }
  fail("unknown host kind " + key);
}

std::string join_vertices(const std::vector<vertex>& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += vertex_json(vs[i]).dump();
  }
  return out + "]";
}

}  // namespace

std::string vertex_to_json(const vertex& v) { return vertex_json(v).dump(); }
std::string host_to_json(const host_graph& h) { return host_json(h).dump(); }

certificate make_certificate(const sun_system& s, int k) {
  certificate c;
  c.kind = "sun-system";
  c.k = k;
  c.host = s.host;
  c.legend = s.legend;
  c.suns = s.blocks;
  return c;
}

certificate make_certificate(const cycle_system& s, int k) {
  certificate c;
  c.kind = "cycle-system";
  c.k = k;
  c.host = s.host;
  c.legend = s.legend;
  c.cycles = s.blocks;
  return c;
}

std::string to_json(const certificate& c) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"format\": " << c.format << ",\n";
  os << "  \"kind\": " << json(c.kind).dump() << ",\n";
  os << "  \"k\": " << c.k << ",\n";
  os << "  \"host\": " << host_json(c.host).dump() << ",\n";
  os << "  \"vertices\": [";
  for (std::size_t i = 0; i < c.legend.size(); ++i)
    os << (i ? ",\n    " : "\n    ") << vertex_json(c.legend[i]).dump();
  os << (c.legend.empty() ? "],\n" : "\n  ],\n");
  os << "  \"blocks\": [";
  std::size_t n = 0;
  for (const auto& s : c.suns)
    os << (n++ ? ",\n    " : "\n    ") << "{\"rim\":" << join_vertices(s.rim)
       << ",\"pendants\":" << join_vertices(s.pendants) << "}";
  for (const auto& cy : c.cycles) os << (n++ ? ",\n    " : "\n    ") << "{\"rim\":" << join_vertices(cy.rim) << "}";
  os << (n ? "\n  ]\n" : "]\n");
  os << "}\n";
  return os.str();
}

certificate certificate_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("top level must be an object");
  certificate c;
  try {
    c.format = as_int(j.at("format"), "format");
    if (c.format != 1) fail("unsupported format version " + std::to_string(c.format));
    c.kind = j.at("kind").get<std::string>();
    if (c.kind != "sun-system" && c.kind != "cycle-system") fail("unknown kind " + c.kind);
    c.k = as_int(j.at("k"), "k");
    c.host = parse_host(j.at("host"));
    for (const auto& v : j.at("vertices")) c.legend.push_back(parse_vertex(v));
    for (const auto& b : j.at("blocks")) {
      if (!b.is_object()) fail("block must be an object");
      std::vector<vertex> rim;
      for (const auto& v : b.at("rim")) rim.push_back(parse_vertex(v));
      if (c.kind == "sun-system") {
        sun s;
        s.rim = std::move(rim);
        for (const auto& v : b.at("pendants")) s.pendants.push_back(parse_vertex(v));
        c.suns.push_back(std::move(s));
      } else {
        c.cycles.push_back(cycle{std::move(rim)});
      }
    }
  } catch (const json::exception& e) {
    fail(std::string("missing or mistyped field: ") + e.what());
  }
  return c;
}

verify_report verify(const certificate& c) {
  if (c.kind == "sun-system") return verify_blocks(c.host, c.legend, c.k, c.suns);
  return verify_blocks(c.host, c.legend, c.k, c.cycles);
}

}  // namespace sunsys
