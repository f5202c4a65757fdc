#include "pmpc/search/velocity_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "pmpc/core/errors.hpp"
#include "pmpc/kernels/axis_min_time.hpp"
#include "pmpc/kernels/collision_scan.hpp"

namespace pmpc::search {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> leg_edge_times(const Vec3& pos_a, const std::vector<Vec3>& va,
                                   const Vec3& pos_b, const std::vector<Vec3>& vb,
                                   const Vec3& a_max) {
  const std::size_t na = va.size(), nb = vb.size(), n = na * nb;
  std::vector<double> s_buf(n), f_buf(n), t_axis(n), edge(n);
  for (int axis = 0; axis < 3; ++axis) {
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j) {
        s_buf[i * nb + j] = va[i](axis);
        f_buf[i * nb + j] = vb[j](axis);
      }
    kernels::axis_min_time_batch(pos_b(axis) - pos_a(axis), s_buf.data(), f_buf.data(),
                                 a_max(axis), t_axis.data(), n);
    if (axis == 0)
      edge = t_axis;
    else
      for (std::size_t k = 0; k < n; ++k) edge[k] = std::max(edge[k], t_axis[k]);
  }
  return edge;
}

}  // namespace

Vec3 heading_direction(const Vec3& from, const Vec3& to) {
  const Vec3 diff = to - from;
  const double n = diff.norm();
  if (n < 1e-12)
    throw DegenerateTrackError("coincident waypoints leave the heading undefined");
  return diff / n;
}

std::vector<Vec3> magnitude_samples(const Vec3& unit_dir, int count, double step) {
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 1; k <= count; ++k) out.push_back(static_cast<double>(k) * step * unit_dir);
  return out;
}

std::vector<Vec3> cone_resample(const Vec3& v_ref, const std::vector<double>& angles_deg,
                                int azimuths) {
  std::vector<Vec3> out{v_ref};
  const double mag = v_ref.norm();
  if (mag == 0.0 || azimuths <= 0) return out;

  const Vec3 dir = v_ref / mag;
  const Vec3 ref = std::abs(dir.x()) <= 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 b1 = dir.cross(ref).normalized();
  const Vec3 b2 = dir.cross(b1);

  for (const double angle_deg : angles_deg) {
    const double theta = angle_deg * M_PI / 180.0;
    const double c = std::cos(theta), s = std::sin(theta);
    for (int j = 0; j < azimuths; ++j) {
      const double phi = 2.0 * M_PI * static_cast<double>(j) / azimuths;
      const Vec3 tilted = c * dir + s * (std::cos(phi) * b1 + std::sin(phi) * b2);
      out.push_back(mag * tilted);
    }
  }
  return out;
}

VelocityGraph build_graph(const Vec3& start_pos, const Vec3& start_vel,
                          const std::vector<TargetPoint>& waypoints,
                          const std::vector<std::vector<Vec3>>& samples,
                          const Vec3& a_max) {
  VelocityGraph g;
  g.layers.push_back({start_pos, {start_vel}});
  for (std::size_t i = 0; i < waypoints.size(); ++i)
    g.layers.push_back({waypoints[i].position, samples[i]});

  g.leg_times.reserve(waypoints.size());
  for (std::size_t l = 0; l + 1 < g.layers.size(); ++l)
    g.leg_times.push_back(leg_edge_times(g.layers[l].position, g.layers[l].velocities,
                                         g.layers[l + 1].position,
                                         g.layers[l + 1].velocities, a_max));
  return g;
}

GraphPath dijkstra_min_time(const VelocityGraph& graph) {
  const std::size_t n_layers = graph.layers.size();
  GraphPath result;
  result.choice.assign(n_layers, 0);
  if (n_layers <= 1) return result;

  std::vector<std::size_t> offset(n_layers, 0);
  std::size_t total_nodes = 0;
  for (std::size_t l = 0; l < n_layers; ++l) {
    offset[l] = total_nodes;
    total_nodes += graph.layers[l].velocities.size();
  }

  std::vector<double> dist(total_nodes, kInf);
  std::vector<int> parent(total_nodes, -1);
  std::vector<std::size_t> node_layer(total_nodes);
  for (std::size_t l = 0; l < n_layers; ++l)
    for (std::size_t i = 0; i < graph.layers[l].velocities.size(); ++i)
      node_layer[offset[l] + i] = l;

  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[0] = 0.0;
  queue.push({0.0, 0});

  while (!queue.empty()) {
    const auto [d, node] = queue.top();
    queue.pop();
    if (d > dist[node]) continue;
    const std::size_t l = node_layer[node];
    if (l + 1 >= n_layers) continue;
    const std::size_t i = node - offset[l];
    const std::size_t nb = graph.layers[l + 1].velocities.size();
    const auto& edges = graph.leg_times[l];
    for (std::size_t j = 0; j < nb; ++j) {
      const double cand = d + edges[i * nb + j];
      const std::size_t to = offset[l + 1] + j;
      if (cand < dist[to]) {
        dist[to] = cand;
        parent[to] = static_cast<int>(node);
        queue.push({cand, to});
      }
    }
  }

  // best terminal node, smallest index on ties
  const std::size_t last = n_layers - 1;
  std::size_t best = offset[last];
  for (std::size_t j = 0; j < graph.layers[last].velocities.size(); ++j)
    if (dist[offset[last] + j] < dist[best]) best = offset[last] + j;

  result.total_time = dist[best];
  std::size_t node = best;
  for (std::size_t l = last; l > 0; --l) {
    result.choice[l] = static_cast<int>(node - offset[l]);
    node = static_cast<std::size_t>(parent[node]);
  }
  return result;
}

Vec3 VelocityPlan::position_at(double t) const {
  for (const auto& leg : legs)
    if (t <= leg.start_time + leg.total_time) return leg.position_at(t - leg.start_time);
  return legs.back().position_at(legs.back().total_time);
}

Vec3 VelocityPlan::velocity_at(double t) const {
  for (const auto& leg : legs)
    if (t <= leg.start_time + leg.total_time) return leg.velocity_at(t - leg.start_time);
  return legs.back().velocity_at(legs.back().total_time);
}

namespace {

std::vector<std::vector<Vec3>> magnitude_stage_samples(
    const Vec3& current_pos, const std::vector<TargetPoint>& waypoints,
    const SearchConfig& config) {
  std::vector<std::vector<Vec3>> samples;
  samples.reserve(waypoints.size());
  Vec3 prev = current_pos;
  for (const auto& wp : waypoints) {
    if (wp.fixed_velocity) {
      samples.push_back({*wp.fixed_velocity});
    } else {
      const Vec3 dir = heading_direction(prev, wp.position);
      samples.push_back(magnitude_samples(dir, config.magnitude_count,
                                          config.magnitude_step));
    }
    prev = wp.position;
  }
  return samples;
}

}  // namespace

VelocityPlan plan_velocities(const Vec3& current_pos, const Vec3& current_vel,
                             const std::vector<TargetPoint>& waypoints_in,
                             const Vec3& a_max, const SearchConfig& config) {
  if (waypoints_in.empty())
    throw DegenerateTrackError("velocity search requires at least one waypoint");

  std::vector<TargetPoint> waypoints = waypoints_in;
  if (config.max_waypoints > 0 &&
      waypoints.size() > static_cast<std::size_t>(config.max_waypoints))
    waypoints.resize(static_cast<std::size_t>(config.max_waypoints));

  // pass 1: magnitudes along the waypoint headings
  const auto stage1_samples = magnitude_stage_samples(current_pos, waypoints, config);
  const VelocityGraph g1 =
      build_graph(current_pos, current_vel, waypoints, stage1_samples, a_max);
  const GraphPath p1 = dijkstra_min_time(g1);

  // pass 2: equal-magnitude cones around the pass-1 optimum
  std::vector<std::vector<Vec3>> stage2_samples;
  stage2_samples.reserve(waypoints.size());
  for (std::size_t i = 0; i < waypoints.size(); ++i) {
    if (waypoints[i].fixed_velocity) {
      stage2_samples.push_back({*waypoints[i].fixed_velocity});
    } else {
      const Vec3 v_min = stage1_samples[i][static_cast<std::size_t>(p1.choice[i + 1])];
      stage2_samples.push_back(
          cone_resample(v_min, config.cone_angles_deg, config.cone_azimuths));
    }
  }
  const VelocityGraph g2 =
      build_graph(current_pos, current_vel, waypoints, stage2_samples, a_max);
  const GraphPath p2 = dijkstra_min_time(g2);

  VelocityPlan plan;
  plan.stage1_total_time = p1.total_time;
  plan.waypoint_velocities.reserve(waypoints.size());
  for (std::size_t i = 0; i < waypoints.size(); ++i)
    plan.waypoint_velocities.push_back(
        stage2_samples[i][static_cast<std::size_t>(p2.choice[i + 1])]);

  Vec3 pos = current_pos, vel = current_vel;
  double t0 = 0.0;
  plan.legs.reserve(waypoints.size());
  plan.arrival_times.reserve(waypoints.size());
  for (std::size_t i = 0; i < waypoints.size(); ++i) {
    auto leg = pointmass::solve_3d_min_time(pos, vel, waypoints[i].position,
                                            plan.waypoint_velocities[i], a_max);
    leg.start_time = t0;
    t0 += leg.total_time;
    plan.arrival_times.push_back(t0);
    plan.legs.push_back(std::move(leg));
    pos = waypoints[i].position;
    vel = plan.waypoint_velocities[i];
  }
  plan.total_time = t0;
  return plan;
}

VelocityPlan make_hold_plan(const Vec3& pos, double duration) {
  VelocityPlan plan;
  pointmass::MassPointTrajectory hold;
  for (int axis = 0; axis < 3; ++axis) {
    auto& p = hold.axes[axis];
    p.start_pos = p.end_pos = p.switch_pos = pos(axis);
    p.start_vel = p.end_vel = p.switch_vel = 0.0;
    p.accel_first = 0.0;
    p.t1 = p.t2 = 0.5 * duration;
    p.beta = 1.0;
  }
  hold.total_time = duration;
  plan.legs.push_back(hold);
  plan.arrival_times.push_back(duration);
  plan.total_time = duration;
  return plan;
}

std::optional<double> first_collision_time(const VelocityPlan& plan_a,
                                           const VelocityPlan& plan_b,
                                           const Vec3& e_diag, double delta_tol,
                                           double dt) {
  if (plan_a.legs.empty() || plan_b.legs.empty()) return std::nullopt;
  const double common = std::min(plan_a.total_time, plan_b.total_time);
  const auto n = static_cast<std::size_t>(std::floor(common / dt)) + 1;

  std::vector<double> ax(n), ay(n), az(n), bx(n), by(n), bz(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) * dt;
    const Vec3 pa = plan_a.position_at(t);
    const Vec3 pb = plan_b.position_at(t);
    ax[k] = pa.x();
    ay[k] = pa.y();
    az[k] = pa.z();
    bx[k] = pb.x();
    by[k] = pb.y();
    bz[k] = pb.z();
  }
  const std::ptrdiff_t hit = kernels::first_proximity_index(
      ax.data(), ay.data(), az.data(), bx.data(), by.data(), bz.data(), n, e_diag.x(),
      e_diag.y(), e_diag.z(), delta_tol * delta_tol);
  if (hit < 0) return std::nullopt;
  return static_cast<double>(hit) * dt;
}

}  // namespace pmpc::search
