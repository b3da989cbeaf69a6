#include "permspec/report_json.hpp"

#include "permspec/errors.hpp"

namespace permspec {

namespace {

JsonDocument moments_to_json(const std::vector<MomentValue>& moments) {
    JsonDocument arr = JsonDocument::array();
    for (const auto& m : moments)
        arr.push_back({{"k", m.k}, {"value", m.value.to_decimal()}});
    return arr;
}

std::vector<MomentValue> moments_from_json(const JsonDocument& arr) {
    std::vector<MomentValue> moments;
    for (const auto& item : arr)
        moments.push_back(MomentValue{item.at("k").get<unsigned>(),
                                      BigCount::from_decimal(item.at("value").get<std::string>())});
    return moments;
}

std::vector<int> shift_up(const std::vector<int>& points) {
    std::vector<int> out;
    out.reserve(points.size());
    for (int p : points)
        out.push_back(p + 1);
    return out;
}

std::vector<int> shift_down(const std::vector<int>& points) {
    std::vector<int> out;
    out.reserve(points.size());
    for (int p : points)
        out.push_back(p - 1);
    return out;
}

} // namespace

JsonDocument to_json(const Spectrum& spectrum) {
    return JsonDocument{{"degree", spectrum.degree},
                        {"filter", filter_name(spectrum.filter)},
                        {"values", spectrum.values}};
}

Spectrum spectrum_from_json(const JsonDocument& doc) {
    auto filter = filter_from_name(doc.at("filter").get<std::string>());
    if (!filter)
        throw ParseError("unknown spectrum filter in JSON");
    return Spectrum{doc.at("values").get<std::vector<int>>(), *filter,
                    doc.at("degree").get<int>()};
}

JsonDocument to_json(const DivisibilityReport& report) {
    JsonDocument doc{{"degree", report.degree},
                     {"order", report.group_order.to_decimal()},
                     {"spectrum", to_json(report.spectrum)},
                     {"product", report.product.to_decimal()},
                     {"divides", report.divides}};
    if (report.quotient)
        doc["quotient"] = report.quotient->to_decimal();
    doc["sharp"] = report.is_sharp;
    return doc;
}

DivisibilityReport divisibility_report_from_json(const JsonDocument& doc) {
    DivisibilityReport report;
    report.degree = doc.at("degree").get<int>();
    report.group_order = BigCount::from_decimal(doc.at("order").get<std::string>());
    report.spectrum = spectrum_from_json(doc.at("spectrum"));
    report.product = BigCount::from_decimal(doc.at("product").get<std::string>());
    report.divides = doc.at("divides").get<bool>();
    if (doc.contains("quotient"))
        report.quotient = BigCount::from_decimal(doc.at("quotient").get<std::string>());
    report.is_sharp = doc.at("sharp").get<bool>();
    return report;
}

JsonDocument to_json(const FrobeniusReport& report) {
    JsonDocument kernel = JsonDocument::array();
    for (const auto& g : report.kernel_elements)
        kernel.push_back(format_cycles(g));
    return JsonDocument{{"is_frobenius", report.is_frobenius},
                        {"kernel_size", report.kernel_size},
                        {"kernel_is_subgroup", report.kernel_is_subgroup},
                        {"kernel_is_normal", report.kernel_is_normal},
                        {"kernel_size_equals_degree", report.kernel_size_equals_degree},
                        {"kernel_elements", kernel}};
}

FrobeniusReport frobenius_report_from_json(const JsonDocument& doc) {
    FrobeniusReport report;
    report.is_frobenius = doc.at("is_frobenius").get<bool>();
    report.kernel_size = doc.at("kernel_size").get<std::uint64_t>();
    report.kernel_is_subgroup = doc.at("kernel_is_subgroup").get<bool>();
    report.kernel_is_normal = doc.at("kernel_is_normal").get<bool>();
    report.kernel_size_equals_degree = doc.at("kernel_size_equals_degree").get<bool>();
    // kernel elements need the degree to parse; reports carry it one level up
    return report;
}

JsonDocument to_json(const BochertReport& report) {
    return JsonDocument{{"applicable", report.applicable},
                        {"bound", report.bound.to_decimal()},
                        {"order", report.group_order.to_decimal()},
                        {"satisfied", report.satisfied}};
}

BochertReport bochert_report_from_json(const JsonDocument& doc) {
    BochertReport report;
    report.applicable = doc.at("applicable").get<bool>();
    report.bound = BigCount::from_decimal(doc.at("bound").get<std::string>());
    report.group_order = BigCount::from_decimal(doc.at("order").get<std::string>());
    report.satisfied = doc.at("satisfied").get<bool>();
    return report;
}

JsonDocument to_json(const ClassificationReport& report) {
    JsonDocument doc{{"degree", report.degree},
                     {"order", report.order.to_decimal()},
                     {"num_orbits", report.num_orbits},
                     {"transitive", report.transitive},
                     {"transitivity_degree", report.transitivity_degree}};
    if (report.sharply_transitive_k)
        doc["sharply_transitive_k"] = *report.sharply_transitive_k;
    if (report.rank)
        doc["rank"] = *report.rank;
    doc["primitive"] = report.primitivity.primitive;
    if (report.primitivity.witness_block)
        doc["block_witness"] = shift_up(*report.primitivity.witness_block);
    if (report.bochert)
        doc["bochert"] = to_json(*report.bochert);
    if (report.is_sharp)
        doc["sharp"] = *report.is_sharp;
    if (report.spectrum_all)
        doc["spectrum_all"] = to_json(*report.spectrum_all);
    if (report.spectrum_prime_power)
        doc["spectrum_prime_power"] = to_json(*report.spectrum_prime_power);
    if (report.spectrum_prime)
        doc["spectrum_prime"] = to_json(*report.spectrum_prime);
    if (report.frobenius)
        doc["frobenius"] = to_json(*report.frobenius);
    doc["moments"] = moments_to_json(report.moments);
    return doc;
}

ClassificationReport classification_report_from_json(const JsonDocument& doc) {
    ClassificationReport report;
    report.degree = doc.at("degree").get<int>();
    report.order = BigCount::from_decimal(doc.at("order").get<std::string>());
    report.num_orbits = doc.at("num_orbits").get<int>();
    report.transitive = doc.at("transitive").get<bool>();
    report.transitivity_degree = doc.at("transitivity_degree").get<int>();
    if (doc.contains("sharply_transitive_k"))
        report.sharply_transitive_k = doc.at("sharply_transitive_k").get<int>();
    if (doc.contains("rank"))
        report.rank = doc.at("rank").get<int>();
    report.primitivity.primitive = doc.at("primitive").get<bool>();
    if (doc.contains("block_witness"))
        report.primitivity.witness_block = shift_down(doc.at("block_witness").get<std::vector<int>>());
    if (doc.contains("bochert"))
        report.bochert = bochert_report_from_json(doc.at("bochert"));
    if (doc.contains("sharp"))
        report.is_sharp = doc.at("sharp").get<bool>();
    if (doc.contains("spectrum_all"))
        report.spectrum_all = spectrum_from_json(doc.at("spectrum_all"));
    if (doc.contains("spectrum_prime_power"))
        report.spectrum_prime_power = spectrum_from_json(doc.at("spectrum_prime_power"));
    if (doc.contains("spectrum_prime"))
        report.spectrum_prime = spectrum_from_json(doc.at("spectrum_prime"));
    if (doc.contains("frobenius")) {
        report.frobenius = frobenius_report_from_json(doc.at("frobenius"));
        for (const auto& text : doc.at("frobenius").at("kernel_elements"))
            report.frobenius->kernel_elements.push_back(
                parse_cycles(text.get<std::string>(), report.degree));
    }
    report.moments = moments_from_json(doc.at("moments"));
    return report;
}

} // namespace permspec
