#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "githru/analytics/graph.hpp"
#include "githru/ingest/commit_type.hpp"
#include "githru/ingest/keywords.hpp"
#include "githru/service/serialize.hpp"
#include "githru/service/service.hpp"

namespace py = pybind11;
using namespace githru;

namespace {

struct PySnapshot {
    std::shared_ptr<const AnalysisSnapshot> snap;

    std::vector<std::pair<std::string, std::string>> stems() const {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& s : snap->raw_stems()) out.emplace_back(s.name, std::string(stemgraph::to_string(s.type)));
        return out;
    }

    std::vector<std::string> stem_commits(const std::string& name) const {
        for (const auto& s : snap->raw_stems()) {
            if (s.name != name) continue;
            std::vector<std::string> ids;
            for (auto c : s.commits) ids.push_back(snap->dag().id(c));
            return ids;
        }
        throw Error(ErrorCode::InvalidParams, "no stem named " + name);
    }
};

service::QueryParams to_query(const std::map<std::string, py::object>& params) {
    service::QueryParams query;
    for (const auto& [key, value] : params) {
        if (py::isinstance<py::bool_>(value)) {
            query.emplace(key, value.cast<bool>() ? "true" : "false");
        } else if (py::isinstance<py::list>(value) || py::isinstance<py::tuple>(value)) {
            for (const auto& v : value) query.emplace(key, py::str(v).cast<std::string>());
        } else {
            query.emplace(key, py::str(value).cast<std::string>());
        }
    }
    return query;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "githru analysis engine";

    static py::exception<Error> error_type(m, "GithruError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            auto cls = py::reinterpret_borrow<py::object>(error_type.ptr());
            py::object err = cls(e.what());
            err.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(error_type.ptr(), err.ptr());
        }
    });

    py::class_<PySnapshot>(m, "Snapshot")
        .def_property_readonly("repo_id", [](const PySnapshot& s) { return s.snap->repo_id(); })
        .def_property_readonly("main_branch", [](const PySnapshot& s) { return s.snap->main_branch(); })
        .def_property_readonly("commit_count", [](const PySnapshot& s) { return s.snap->dag().size(); })
        .def_property_readonly("warnings", [](const PySnapshot& s) { return s.snap->warnings(); })
        .def("stems", &PySnapshot::stems, "(name, type) pairs in display order")
        .def("stem_commits", &PySnapshot::stem_commits, py::arg("name"), "Commit ids of a stem, oldest first")
        .def("csm_node_count", [](const PySnapshot& s) { return s.snap->csm().nodes.size(); })
        .def("to_file_text", [](const PySnapshot& s) { return write_snapshot_file(*s.snap); });

    m.def(
        "ingest_log",
        [](const std::string& repo_id, const std::string& log, const std::string& pr_json, const std::string& tags,
           const std::string& main_branch, std::optional<std::vector<std::string>> stop_words) {
            auto inputs = inputs_from_raw(repo_id, log, pr_json, tags, main_branch);
            inputs.stop_words = std::move(stop_words);
            py::gil_scoped_release release;
            return PySnapshot{AnalysisSnapshot::build(std::move(inputs))};
        },
        py::arg("repo_id"), py::arg("log"), py::arg("pr_json") = "", py::arg("tags") = "",
        py::arg("main_branch") = "master", py::arg("stop_words") = py::none(),
        "Builds a snapshot from a pinned-format git log dump");

    m.def(
        "load_snapshot",
        [](const std::string& text) { return PySnapshot{AnalysisSnapshot::build(read_snapshot_file(text))}; },
        py::arg("text"), "Builds a snapshot from snapshot file contents");

    m.def(
        "graph_json",
        [](const PySnapshot& s, const std::map<std::string, py::object>& params) {
            const auto parsed = service::parse_graph_params(to_query(params));
            py::gil_scoped_release release;
            const auto graph = analytics::compute_graph(*s.snap, parsed);
            return service::graph_to_json(*s.snap, graph).dump();
        },
        py::arg("snapshot"), py::arg("params") = std::map<std::string, py::object>{},
        "Graph response as JSON text; params use the HTTP query names");

    m.def("classify_commit_type", [](const std::string& msg) { return std::string(ingest::to_string(ingest::classify_commit_type(msg))); });
    m.def("tokenize", [](const std::string& text) { return ingest::tokenize(text); });

    py::class_<service::Service>(m, "Service")
        .def(py::init<std::size_t>(), py::arg("cache_capacity") = service::kDefaultCacheCapacity)
        .def("add_snapshot", [](service::Service& svc, const PySnapshot& s) { svc.add_snapshot(s.snap); })
        .def(
            "handle",
            [](service::Service& svc, const std::string& method, const std::string& path,
               const std::vector<std::pair<std::string, std::string>>& query, const std::string& body) {
                service::Request req{method, path, {}, body};
                for (const auto& [k, v] : query) req.query.emplace(k, v);
                service::Response res;
                {
                    py::gil_scoped_release release;
                    res = svc.handle(req);
                }
                return std::make_pair(res.status, res.text());
            },
            py::arg("method"), py::arg("path"), py::arg("query") = std::vector<std::pair<std::string, std::string>>{},
            py::arg("body") = "", "Returns (status, JSON text)")
        .def_property_readonly("cache_size", &service::Service::cache_size);
}
