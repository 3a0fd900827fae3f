#include "hf/report.hpp"

#include <iomanip>

#include <json.hpp>

namespace hf {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string or_empty(const std::optional<Rational>& q) {
    return q ? q->to_string() : std::string();
}

ordered_json instance_json(const VerificationReport& rep, const InstanceResult& ins) {
    ordered_json j;
    j["id"] = rep.id;
    j["backend"] = rep.backend;
    j["n"] = ins.binding.n;
    j["b"] = ins.binding.b ? ordered_json(ins.binding.b->to_string()) : ordered_json(nullptr);
    j["c"] = ins.binding.c ? ordered_json(ins.binding.c->to_string()) : ordered_json(nullptr);
    j["m"] = ins.binding.m ? ordered_json(*ins.binding.m) : ordered_json(nullptr);
    j["lhs"] = ins.lhs_text;
    j["rhs"] = ins.rhs_text;
    j["status"] = status_name(ins.status);
    j["lhs_width"] = ins.lhs_width ? ordered_json(ins.lhs_width->to_string())
                                   : ordered_json(nullptr);
    j["rhs_width"] = ins.rhs_width ? ordered_json(ins.rhs_width->to_string())
                                   : ordered_json(nullptr);
    j["note"] = ins.note;
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "human") return OutputFormat::Human;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "jsonl") return OutputFormat::Jsonl;
    throw DomainError("unknown output format '" + name + "'");
}

void write_csv_header(std::ostream& os) {
    os << "id,backend,n,b,c,m,lhs,rhs,status,lhs_width,rhs_width,note\n";
}

void write_report(std::ostream& os, const VerificationReport& rep, OutputFormat fmt,
                  bool with_header) {
    switch (fmt) {
        case OutputFormat::Csv: {
            if (with_header) write_csv_header(os);
            for (const auto& ins : rep.instances) {
                os << csv_field(rep.id) << ',' << rep.backend << ',' << ins.binding.n << ','
                   << (ins.binding.b ? ins.binding.b->to_string() : "") << ','
                   << (ins.binding.c ? ins.binding.c->to_string() : "") << ','
                   << (ins.binding.m ? std::to_string(*ins.binding.m) : "") << ','
                   << csv_field(ins.lhs_text) << ',' << csv_field(ins.rhs_text) << ','
                   << status_name(ins.status) << ',' << or_empty(ins.lhs_width) << ','
                   << or_empty(ins.rhs_width) << ',' << csv_field(ins.note) << '\n';
            }
            break;
        }
        case OutputFormat::Jsonl: {
            for (const auto& ins : rep.instances) os << instance_json(rep, ins).dump() << '\n';
            break;
        }
        case OutputFormat::Human: {
            os << rep.summary() << '\n';
            for (const auto& ins : rep.instances) {
                if (ins.status == Status::Pass) continue;
                os << "  " << std::left << std::setw(22) << status_name(ins.status)
                   << ins.binding.to_string();
                if (!ins.lhs_text.empty())
                    os << "  lhs=" << ins.lhs_text << "  rhs=" << ins.rhs_text;
                if (!ins.note.empty()) os << "  (" << ins.note << ")";
                os << '\n';
            }
            break;
        }
    }
}

void write_registry(std::ostream& os, OutputFormat fmt) {
    const auto& ids = list_identities();
    switch (fmt) {
        case OutputFormat::Csv: {
            os << "id,params,backends,relations,source,statement\n";
            for (const auto& d : ids) {
                std::string be;
                for (Backend b :
                     {Backend::ExactRational, Backend::ExactRing, Backend::Interval}) {
                    if (has_backend(d.backends, b)) {
                        if (!be.empty()) be += "|";
                        be += backend_name(b);
                    }
                }
                std::string rels;
                for (const auto& r : d.relations) {
                    if (!rels.empty()) rels += "|";
                    rels += relation_kind_name(r.kind) + ":" + r.target;
                }
                os << csv_field(d.id) << ',' << d.params.to_string() << ',' << be << ','
                   << csv_field(rels) << ',' << csv_field(d.source) << ','
                   << csv_field(d.statement) << '\n';
            }
            break;
        }
        case OutputFormat::Jsonl: {
            for (const auto& d : ids) {
                ordered_json j;
                j["id"] = d.id;
                j["params"] = d.params.to_string();
                ordered_json be = ordered_json::array();
                for (Backend b :
                     {Backend::ExactRational, Backend::ExactRing, Backend::Interval})
                    if (has_backend(d.backends, b)) be.push_back(backend_name(b));
                j["backends"] = be;
                ordered_json rels = ordered_json::array();
                for (const auto& r : d.relations) {
                    ordered_json rj;
                    rj["kind"] = relation_kind_name(r.kind);
                    rj["target"] = r.target;
                    if (!r.note.empty()) rj["note"] = r.note;
                    rels.push_back(rj);
                }
                j["relations"] = rels;
                if (!d.source.empty()) j["source"] = d.source;
                j["statement"] = d.statement;
                os << j.dump() << '\n';
            }
            break;
        }
        case OutputFormat::Human: {
            for (const auto& d : ids) {
                os << std::left << std::setw(20) << d.id << " (" << d.params.to_string()
                   << ")  ";
                for (Backend b :
                     {Backend::ExactRational, Backend::ExactRing, Backend::Interval})
                    if (has_backend(d.backends, b)) os << backend_name(b) << ' ';
                os << '\n' << "    " << d.statement << '\n';
                for (const auto& r : d.relations) {
                    os << "    ~ " << relation_kind_name(r.kind) << ' ' << r.target;
                    if (!r.note.empty()) os << " [" << r.note << "]";
                    os << '\n';
                }
            }
            break;
        }
    }
}

}  // namespace hf
