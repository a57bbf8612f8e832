#include "lgfan/document.hpp"

#include <openssl/evp.h>

#include <climits>
#include <iomanip>
#include <map>
#include <sstream>

#include "json.hpp"

namespace lgfan {

using json = nlohmann::ordered_json;

namespace {

json integer_entry(const Scalar& s) {
  if (s.get_den() == 1 && s.get_num().fits_slong_p()) return s.get_num().get_si();
  return s.get_str();
}

json int_vec(const QVec& v) {
  json a = json::array();
  for (auto& x : v) a.push_back(integer_entry(x));
  return a;
}

json int_mat(const std::vector<QVec>& m) {
  json a = json::array();
  for (auto& r : m) a.push_back(int_vec(r));
  return a;
}

json str_vec(const QVec& v) {
  json a = json::array();
  for (auto& x : v) a.push_back(x.get_str());
  return a;
}

Scalar read_scalar(const json& j) {
  if (j.is_number_integer()) return Scalar(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Scalar s;
    if (s.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad rational '" + j.get<std::string>() + "'");
    s.canonicalize();
    return s;
  }
  throw std::invalid_argument("expected an integer or a rational string");
}

QVec read_vec(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array");
  QVec v;
  for (auto& x : j) v.push_back(read_scalar(x));
  return v;
}

std::vector<QVec> read_mat(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of arrays");
  std::vector<QVec> m;
  for (auto& r : j) m.push_back(read_vec(r));
  return m;
}

bool all_primitive(const json& j) {
  for (auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

// Two-space indentation like dump(2), but arrays of scalars stay on one line.
void write(const json& j, int indent, std::string& out) {
  const std::string pad(indent, ' '), inner(indent + 2, ' ');
  if (j.is_array()) {
    if (j.empty() || all_primitive(j)) {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ", ";
        out += j[i].dump();
      }
      out += ']';
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += inner;
      write(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + ']';
    return;
  }
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += inner + json(it.key()).dump() + ": ";
      write(it.value(), indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + '}';
    return;
  }
  out += j.dump();
}

}  // namespace

bool FanDocument::operator==(const FanDocument& o) const { return emit_json(*this) == emit_json(o); }

void set_fan(FanDocument& doc, const Fan& fan) {
  doc.cones.clear();
  doc.incidence = fan.incidence;
  std::vector<int> mx = fan.maximal();
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    const HCone& c = fan.cones[i];
    ConeRecord r;
    r.id = static_cast<int>(i);
    r.dim = c.dim();
    r.facets = c.facets();
    r.equations = c.equations();
    r.rays = c.rays();
    r.witness = c.interior_point();
    r.maximal = std::find(mx.begin(), mx.end(), static_cast<int>(i)) != mx.end();
    doc.cones.push_back(std::move(r));
  }
  doc.lineality = fan.cones.empty() ? std::vector<QVec>{} : fan.cones.back().lineality();
}

Fan document_fan(const FanDocument& doc) {
  Fan f;
  for (auto& r : doc.cones) f.cones.emplace_back(doc.parameter_dim, r.facets, r.equations);
  f.incidence = doc.incidence;
  return f;
}

std::string emit_json(const FanDocument& doc) {
  json j;
  j["format"] = kFormat;
  j["mode"] = doc.mode;
  if (doc.equal) {
    j["equal"] = *doc.equal;
  } else {
    j["region"] = doc.region;
    j["ambient_dim"] = doc.ambient_dim;
    j["parameter_dim"] = doc.parameter_dim;
    j["subspace"] = int_mat(doc.subspace);
    j["lineality"] = int_mat(doc.lineality);
    json cones = json::array();
    for (auto& c : doc.cones) {
      json o;
      o["id"] = c.id;
      o["dim"] = c.dim;
      o["facets"] = int_mat(c.facets);
      o["equations"] = int_mat(c.equations);
      o["rays"] = int_mat(c.rays);
      o["witness"] = str_vec(c.witness);
      if (c.maximal) o["initial_ideal"] = c.initial_ideal;
      o["class"] = c.class_id ? json(*c.class_id) : json(nullptr);
      o["members"] = c.members;
      o["maximal"] = c.maximal;
      cones.push_back(std::move(o));
    }
    j["cones"] = std::move(cones);
    json inc = json::array();
    for (auto [a, b] : doc.incidence) inc.push_back(json::array({a, b}));
    j["incidence"] = std::move(inc);
    if (doc.validation) {
      json v;
      v["ok"] = doc.validation->ok;
      v["axiom"] = doc.validation->axiom;
      v["message"] = doc.validation->message;
      j["validation"] = std::move(v);
    }
  }
  json prov;
  prov["input_sha256"] = doc.input_sha256;
  prov["tool_version"] = doc.tool_version;
  j["provenance"] = std::move(prov);
  std::string out;
  write(j, 0, out);
  return out + "\n";
}

FanDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  try {
    if (j.value("format", "") != kFormat) throw std::invalid_argument("unknown document format");
    FanDocument doc;
    doc.mode = j.at("mode").get<std::string>();
    if (j.contains("equal")) {
      doc.equal = j.at("equal").get<bool>();
    } else {
      doc.region = j.at("region").get<std::string>();
      doc.ambient_dim = j.at("ambient_dim").get<int>();
      doc.parameter_dim = j.at("parameter_dim").get<int>();
      doc.subspace = read_mat(j.at("subspace"));
      doc.lineality = read_mat(j.at("lineality"));
      for (auto& o : j.at("cones")) {
        ConeRecord c;
        c.id = o.at("id").get<int>();
        c.dim = o.at("dim").get<int>();
        c.facets = read_mat(o.at("facets"));
        c.equations = read_mat(o.at("equations"));
        c.rays = read_mat(o.at("rays"));
        c.witness = read_vec(o.at("witness"));
        if (o.contains("initial_ideal")) c.initial_ideal = o.at("initial_ideal").get<std::vector<std::string>>();
        if (!o.at("class").is_null()) c.class_id = o.at("class").get<int>();
        c.members = o.at("members").get<int>();
        c.maximal = o.at("maximal").get<bool>();
        for (auto* m : {&c.facets, &c.equations, &c.rays})
          for (auto& r : *m)
            if (static_cast<int>(r.size()) != doc.parameter_dim)
              throw std::invalid_argument("cone " + std::to_string(c.id) + " has a vector of the wrong length");
        doc.cones.push_back(std::move(c));
      }
      for (auto& p : j.at("incidence")) {
        int a = p.at(0).get<int>(), b = p.at(1).get<int>();
        if (a < 0 || b < 0 || a >= static_cast<int>(doc.cones.size()) || b >= static_cast<int>(doc.cones.size()))
          throw std::invalid_argument("incidence refers to a missing cone");
        doc.incidence.emplace_back(a, b);
      }
      if (j.contains("validation")) {
        FanReport r;
        r.ok = j["validation"].at("ok").get<bool>();
        r.axiom = j["validation"].at("axiom").get<int>();
        r.message = j["validation"].at("message").get<std::string>();
        doc.validation = r;
      }
    }
    doc.input_sha256 = j.at("provenance").at("input_sha256").get<std::string>();
    doc.tool_version = j.at("provenance").at("tool_version").get<std::string>();
    return doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("invalid fan document: ") + e.what());
  }
}

std::string emit_summary(const FanDocument& doc) {
  std::ostringstream os;
  os << "mode: " << doc.mode << "\n";
  if (doc.equal) {
    os << "initial ideals equal: " << (*doc.equal ? "yes" : "no") << "\n";
    return os.str();
  }
  const int lin = static_cast<int>(doc.lineality.size());
  int maximal = 0, rays = 0;
  std::map<int, int, std::greater<>> by_dim;
  for (auto& c : doc.cones) {
    if (c.maximal) ++maximal;
    if (c.dim == lin + 1) ++rays;
    ++by_dim[c.dim];
  }
  os << "region: " << doc.region << "\n";
  os << "ambient dimension: " << doc.ambient_dim << "; parameter dimension: " << doc.parameter_dim
     << "; lineality: " << lin << "\n";
  os << "maximal cones: " << maximal << "; rays: " << rays << "\n";
  os << "cones: " << doc.cones.size() << " (";
  bool first = true;
  for (auto [d, k] : by_dim) {
    os << (first ? "" : ", ") << "dim " << d << ": " << k;
    first = false;
  }
  os << ")\n";
  for (auto& c : doc.cones) {
    if (!c.maximal || !c.class_id || c.members <= 1) continue;
    os << "class " << *c.class_id << ": " << c.members << " cones glued into cone " << c.id << "\n";
  }
  if (doc.validation) {
    if (doc.validation->ok)
      os << "validation: ok\n";
    else
      os << "validation: failed (axiom " << doc.validation->axiom << "): " << doc.validation->message << "\n";
  }
  return os.str();
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

}  // namespace lgfan
