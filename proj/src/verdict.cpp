#include "rza/verdict.hpp"

#include <sstream>

namespace rza {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kRefuted:
      return "Refuted";
    case Status::kUnknown:
      return "Unknown";
    case Status::kProbable:
      return "Probable";
    case Status::kCertified:
      return "Certified";
  }
  return "?";
}

std::string_view to_string(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::kOrigin:
      return "origin";
    case Witness::Kind::kLine:
      return "line";
    case Witness::Kind::kPoint:
      return "point";
    case Witness::Kind::kZeroLine:
      return "zero-line";
    case Witness::Kind::kStructural:
      return "structural";
  }
  return "?";
}

namespace {

std::string vec(const std::vector<Rational>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << to_string(v[i]);
  out << ")";
  return out.str();
}

void render_into(std::ostringstream& out, const Verdict& v, int depth, int max_depth) {
  out << std::string(2 * depth, ' ') << to_string(v.status) << "  " << v.label;
  if (v.samples_used > 0) out << "  [samples=" << v.samples_used;
  if (v.seed) out << (v.samples_used > 0 ? ", " : "  [") << "seed=" << *v.seed;
  if (v.samples_used > 0 || v.seed) out << "]";
  out << "\n";
  if (v.witness) out << std::string(2 * depth + 2, ' ') << "witness: " << describe(*v.witness) << "\n";
  for (const auto& note : v.notes) out << std::string(2 * depth + 2, ' ') << "note: " << note << "\n";
  if (depth + 1 >= max_depth) {
    if (!v.children.empty()) {
      out << std::string(2 * depth + 2, ' ') << "(" << v.children.size() << " sub-verdicts omitted)\n";
    }
    return;
  }
  for (const auto& c : v.children) render_into(out, c, depth + 1, max_depth);
}

}  // namespace

std::string describe(const Witness& w) {
  std::ostringstream out;
  out << to_string(w.kind);
  if (!w.direction.empty()) out << " a=" << vec(w.direction);
  if (!w.offset.empty()) out << " b=" << vec(w.offset);
  if (!w.point.empty()) out << " point=" << vec(w.point);
  if (!w.note.empty()) out << " (" << w.note << ")";
  return out.str();
}

std::string render(const Verdict& v, int max_depth) {
  std::ostringstream out;
  render_into(out, v, 0, max_depth);
  return out.str();
}

}  // namespace rza
