#include "agcvg/mission_export.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "agcvg/arc.hpp"

namespace agcvg {

const char* frame_name(Frame f) { return f == Frame::ugv_rhr ? "ugv_rhr" : "uav_lhr"; }

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10f", v);
    return buf;
}

struct Row {
    Point2 p;  // planner frame
    double z = 0.0;
    const char* action = "cover";
};

void write_rows(std::ostringstream& out, const std::vector<Row>& rows, const Point2& origin,
                bool swap_axes) {
    // ugv_rhr: X = -(x-ox), Y = (y-oy).  uav_lhr: X = (y-oy), Y = (x-ox).
    out << "idx,x_m,y_m,z_m,action\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double dx = rows[i].p.x - origin.x;
        const double dy = rows[i].p.y - origin.y;
        const double X = swap_axes ? dy : -dx;
        const double Y = swap_axes ? dx : dy;
        out << i << ',' << num(X) << ',' << num(Y) << ',' << num(rows[i].z) << ','
            << rows[i].action << '\n';
    }
}

std::vector<Row> ugv_rows(const RendezvousPlan& plan) {
    std::vector<Row> rows;
    const auto& wp = plan.ground.waypoints;
    const auto& marks = plan.ground.segment_transit;
    const ArcWalker arc(wp);

    // Rendezvous stops in arc order; cluster splits can fall inside a path
    // segment, so a stop is not always an existing waypoint.
    std::vector<std::pair<double, Point2>> stops;
    for (const auto& ev : plan.events) {
        if (!stops.empty() && std::abs(stops.back().first - ev.ground_arc_m) <= 1e-9) continue;
        stops.emplace_back(ev.ground_arc_m, ev.location);
    }

    std::size_t next_stop = 0;
    const auto& cum = arc.cum();
    for (std::size_t i = 0; i < wp.size(); ++i) {
        while (next_stop < stops.size() && stops[next_stop].first < cum[i] - 1e-9) {
            rows.push_back({stops[next_stop].second, 0.0, "rendezvous"});
            ++next_stop;
        }
        Row row{wp[i], 0.0, i == 0 ? "dock" : (marks[i - 1] ? "transit" : "cover")};
        if (next_stop < stops.size() && std::abs(stops[next_stop].first - cum[i]) <= 1e-9) {
            row.action = "rendezvous";
            ++next_stop;
        }
        rows.push_back(row);
    }
    for (; next_stop < stops.size(); ++next_stop)
        rows.push_back({stops[next_stop].second, 0.0, "rendezvous"});
    return rows;
}

std::vector<Row> uav_rows(const RendezvousPlan& plan) {
    std::vector<Row> rows;
    auto push = [&rows](const Point2& p, double z, const char* action) {
        if (!rows.empty() && rows.back().p == p && rows.back().z == z &&
            std::string_view(rows.back().action) == action)
            return;
        rows.push_back({p, z, action});
    };
    push(plan.ground.waypoints.front(), 0.0, "dock");
    for (const auto& s : plan.sorties) {
        for (std::size_t i = 1; i < s.ride_in.size(); ++i) push(s.ride_in[i], 0.0, "dock");
        for (std::size_t i = 1; i < s.flight.size(); ++i) {
            if (i + 1 == s.flight.size()) {
                push(s.flight[i], 1.0, "rendezvous");
            } else {
                push(s.flight[i], 3.0, s.flight_transit[i - 1] ? "transit" : "cover");
            }
        }
    }
    return rows;
}

}  // namespace

std::string export_mission(const RendezvousPlan& plan, const Scenario& sc, Frame frame) {
    const Point2 g0 = plan.ground.waypoints.front();
    std::ostringstream out;
    out << "# mission waypoints, frame=" << frame_name(frame) << "\n";
    if (frame == Frame::ugv_rhr) {
        out << "# origin_planner_m: " << num(g0.x) << " " << num(g0.y) << "\n";
        out << "# [X]   [-1  0] [x - origin_x]\n";
        out << "# [Y] = [ 0  1] [y - origin_y]\n";
        write_rows(out, ugv_rows(plan), g0, false);
    } else {
        // Launch offset is given in the UGV frame; the UAV origin in planner
        // coordinates is the point whose UGV-frame position equals the offset.
        const Point2 origin{g0.x - sc.launch_offset_m.x, g0.y + sc.launch_offset_m.y};
        out << "# origin_planner_m: " << num(origin.x) << " " << num(origin.y) << "\n";
        out << "# [X]   [0  1] [x - origin_x]\n";
        out << "# [Y] = [1  0] [y - origin_y]\n";
        write_rows(out, uav_rows(plan), origin, true);
    }
    return out.str();
}

}  // namespace agcvg
