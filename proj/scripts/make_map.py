#!/usr/bin/env python3
"""Generates the bundled river-and-town map (data/river_town.map).

The scenario is a long meandering river past a small riverside town:
motorboats ply the river, four tributaries and two harbor inlets
(water); bicycles ride the town grid, the riverside promenade, two
outlying village loops and two market squares (land).  The networks are
deliberately spread out so that most encounters are brief; the few
places built for lingering are what make larger transfers possible.

Mooring basins and market squares are drawn as dense paths folded
inside a disc smaller than the radio range.  A node winding through
one keeps its cruising speed but makes almost no headway, so it
lingers within range of everyone else inside.  In open water a 15 m/s
boat stays inside another node's 3 m radio disc far too briefly to
complete any transfer; inside a basin it can.  Basin linger time is
set by the folded path length, while how often boats call at a basin
is set by its vertex count (trip endpoints are drawn uniformly over
graph vertices), so the two are tuned independently: long weaves with
coarse vertex spacing give long encounters that stay rare.  The
promenade dips to the harbor steps at each inlet, so passing bicycles
briefly reach moored boats: those two touch points are the only
payload-capable bridges between the land and water populations.

Distances are in meters.  Run from the repository root:

    python3 scripts/make_map.py > data/river_town.map
"""

import math

RIVER_XMIN = -3000.0
RIVER_XMAX = 3000.0
RIVER_STEP = 16.0
RIVER_AMP = 170.0
RIVER_PERIOD = 500.0
TRIB_XS = [-2400.0, -1200.0, 1200.0, 2400.0]
HARBOR_XS = [-200.0, 200.0]
ANCHOR_XS = [-1500.0, 1500.0]

PROM_XMIN = -700.0
PROM_XMAX = 700.0
PROM_STEP = 100.0
PROM_OFFSET = 7.5
STEPS_OFFSET = 1.2

GRID_COLS = [-300.0, -150.0, 0.0, 150.0, 300.0]
GRID_ROWS = [250.0, 400.0, 550.0, 700.0]
PLAZA_JUNCTIONS = [(-150.0, 400.0), (150.0, 550.0)]
VILLAGE_CENTERS = [(-900.0, 475.0), (900.0, 475.0)]
VILLAGE_R = 130.0

# Folded venue lanes: every point sits inside a 1.4 m disc, so any
# two nodes in the venue are within the 3 m radio range; the folded
# path length sets the linger time, the vertex count the visit rate.
SPIRAL_R = 1.4
WEAVE_R = 1.35
HARBOR_WEAVE_N = 32
ANCHOR_WEAVE_N = 128
WEAVE_ANGLE = 2.39996
PLAZA_STEP = 2.0
PLAZA_TURNS = 3
PLAZA_INNER_THETA = 4.0


def river_y(x: float) -> float:
	return RIVER_AMP * math.sin(x / RIVER_PERIOD)


def fmt(v: float) -> str:
	return f"{v:.2f}"


def line(tag: str, pts) -> str:
	out = []
	for x, y in pts:
		p = f"{fmt(x)},{fmt(y)}"
		if not out or out[-1] != p:
			out.append(p)
	return f"LINE:{tag} " + " ".join(out)


def frange(a: float, b: float, step: float):
	n = int(round((b - a) / step))
	return [a + i * step for i in range(n + 1)]


def interp(a, b, spacing: float):
	"""Points from a to b (inclusive) spaced at most `spacing` apart."""
	d = math.hypot(b[0] - a[0], b[1] - a[1])
	n = max(1, int(math.ceil(d / spacing)))
	return [(a[0] + (b[0] - a[0]) * i / n, a[1] + (b[1] - a[1]) * i / n)
	    for i in range(n + 1)]


def polyline(waypoints, spacing: float):
	pts = [waypoints[0]]
	for a, b in zip(waypoints, waypoints[1:]):
		pts.extend(interp(a, b, spacing)[1:])
	return pts


def spiral(entry, turns: int, inner_theta: float, step: float, flip: float = 1.0):
	"""Inward archimedean spiral whose outermost point is `entry`.

	The spiral is centered one radius above (or below, flip=-1) the
	entry so the entry point itself lies on the outermost arc.
	"""
	cx, cy = entry[0], entry[1] + flip * SPIRAL_R
	theta_max = 2.0 * math.pi * turns - math.pi / 2.0
	a = SPIRAL_R / theta_max
	pts = []
	theta = theta_max
	while theta > inner_theta:
		r = a * theta
		pts.append((cx + r * math.cos(theta), cy + flip * r * math.sin(theta)))
		theta -= step / math.hypot(a, r)
	return pts


def weave(entry, n: int, flip: float = 1.0):
	"""Folded mooring lane: a star-polygon walk around a 1.35 m circle.

	Successive points advance by the golden angle, so each hop crosses
	the disc (about 2.5 m) and the lane never closes a short loop: the
	only route to an interior vertex is the full chain, which makes a
	visiting node traverse roughly 2.5 * n meters inside one
	radio disc.
	"""
	cx, cy = entry[0], entry[1] + flip * (WEAVE_R + 0.15)
	pts = []
	for i in range(n):
		ang = WEAVE_ANGLE * i - math.pi / 2.0
		pts.append((cx + WEAVE_R * math.cos(ang),
		    cy + flip * WEAVE_R * math.sin(ang)))
	return pts


def main() -> None:
	out = []

	# River: one long serpentine polyline; harbor xs are forced onto
	# the sample grid so the inlet channels meet a river vertex.
	xs = sorted(set(frange(RIVER_XMIN, RIVER_XMAX, RIVER_STEP))
	    | set(HARBOR_XS) | set(ANCHOR_XS) | set(TRIB_XS))
	out.append(line("water", [(x, river_y(x)) for x in xs]))

	# Tributaries: long dead-end branches leaving the far bank.
	for tx in TRIB_XS:
		ty = river_y(tx)
		way = [(tx, ty), (tx + 120.0, ty - 500.0), (tx + 60.0, ty - 1000.0),
		    (tx + 140.0, ty - 1450.0)]
		out.append(line("water", polyline(way, RIVER_STEP)))

	# Harbor inlets: a short channel from the river to the harbor
	# steps, then a mooring weave.  The steps vertex is shared with
	# the promenade dip below, which joins the two road networks.
	steps = {}
	for hx in HARBOR_XS:
		ry = river_y(hx)
		top = (hx, ry + STEPS_OFFSET)
		steps[hx] = top
		out.append(line("both", [(hx, ry), top]))
		out.append(line("water", [top] + weave(top, HARBOR_WEAVE_N)))

	# Anchorages: mooring weaves off the far bank, away from any
	# road, where boats linger among themselves.
	for ax in ANCHOR_XS:
		ry = river_y(ax)
		mouth = (ax + 30.0, ry - 60.0)
		out.append(line("water", [(ax, ry), mouth]))
		out.append(line("water", [mouth] + weave(mouth, ANCHOR_WEAVE_N, flip=-1.0)))

	# Promenade: riverside path dipping to the harbor steps at each
	# inlet so through traffic passes the moored boats.
	prom = []
	for x in frange(PROM_XMIN, PROM_XMAX, PROM_STEP):
		if x in HARBOR_XS:
			prom.append(steps[x])
		else:
			prom.append((x, river_y(x) + PROM_OFFSET))
	out.append(line("land", prom))

	# Town grid above the promenade.
	for cx in GRID_COLS:
		out.append(line("land", [(cx, y) for y in GRID_ROWS]))
	for ry in GRID_ROWS:
		out.append(line("land", [(x, ry) for x in GRID_COLS]))

	# Connectors from the promenade up to the grid's south row.
	for cx in (-300.0, 0.0, 300.0):
		out.append(line("land",
		    polyline([(cx, river_y(cx) + PROM_OFFSET), (cx, GRID_ROWS[0])], 80.0)))

	# Market squares: spiral lanes off two grid junctions where
	# bicycles linger within radio range of each other.
	for jx, jy in PLAZA_JUNCTIONS:
		out.append(line("land", [(jx, jy)] +
		    spiral((jx, jy), PLAZA_TURNS, PLAZA_INNER_THETA, PLAZA_STEP)))

	# Outlying villages: a loop apiece, reached by a long lane from
	# the grid's middle row.
	for vx, vy in VILLAGE_CENTERS:
		loop = []
		for i in range(9):
			ang = 2.0 * math.pi * i / 8.0
			loop.append((vx + VILLAGE_R * math.cos(ang),
			    vy + VILLAGE_R * math.sin(ang)))
		out.append(line("land", loop))
		side = 1.0 if vx > 0 else -1.0
		gate = (vx - side * VILLAGE_R, vy)
		out.append(line("land",
		    polyline([(side * 300.0, 550.0), (side * 600.0, 512.0), gate], RIVER_STEP)))

	print("\n".join(out))


if __name__ == "__main__":
	main()
