import init, { shapeOutline, boundCurves, sigmaChain } from "./pkg/sphcover_demo.js";

const COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"];
const $ = (id) => document.getElementById(id);
const fmt = (x) => (x == null ? "n/a" : x.toFixed(6));

function showError(e) {
  $("error").textContent = e ? String(e.message ?? e) : "";
}

function drawShape() {
  const kind = $("kind").value;
  const delta = Number($("delta").value);
  $("delta-out").textContent = delta.toFixed(2);
  let o;
  try {
    o = JSON.parse(shapeOutline(kind, delta, Number($("n").value), Number($("k").value)));
    showError(null);
  } catch (e) {
    showError(e);
    return;
  }
  const c = $("shape");
  const g = c.getContext("2d");
  g.clearRect(0, 0, c.width, c.height);
  const cx = c.width / 2, cy = c.height / 2, s = c.width * 0.45;

  // the visible hemisphere's rim
  g.strokeStyle = "#ddd";
  g.beginPath();
  g.arc(cx, cy, s, 0, 2 * Math.PI);
  g.stroke();

  g.strokeStyle = "#d62728";
  g.setLineDash([5, 4]);
  g.beginPath();
  g.arc(cx, cy, s * o.cap_circle, 0, 2 * Math.PI);
  g.stroke();
  g.setLineDash([]);

  g.fillStyle = "rgba(31,119,180,0.15)";
  g.strokeStyle = "#1f77b4";
  g.beginPath();
  o.points.forEach(([x, y], i) => (i ? g.lineTo(cx + s * x, cy - s * y) : g.moveTo(cx + s * x, cy - s * y)));
  g.closePath();
  g.fill();
  g.stroke();

  const rows = [
    ["vertices", o.vertices],
    ["thickness", fmt(o.thickness)],
    ["diameter", fmt(o.diameter)],
    ["width spread", o.width_spread.toExponential(2)],
    ["circumradius", fmt(o.circumradius)],
    [o.bound_name ? `bound (${o.bound_name})` : "bound", fmt(o.bound)],
  ];
  $("metrics").innerHTML = rows.map(([k, v]) => `<tr><td>${k}</td><td>${v}</td></tr>`).join("");
}

function axes(g, c, xmax, ymax, xlabel, ylabel) {
  const pad = 36;
  const sx = (x) => pad + (x / xmax) * (c.width - pad - 10);
  const sy = (y) => c.height - pad - (y / ymax) * (c.height - pad - 10);
  g.clearRect(0, 0, c.width, c.height);
  g.strokeStyle = "#888";
  g.fillStyle = "#444";
  g.beginPath();
  g.moveTo(sx(0), sy(ymax));
  g.lineTo(sx(0), sy(0));
  g.lineTo(sx(xmax), sy(0));
  g.stroke();
  g.fillText(xlabel, c.width - 60, c.height - 8);
  g.fillText(ylabel, 4, 12);
  for (let t = 0; t <= xmax + 1e-9; t += 0.5) g.fillText(t.toFixed(1), sx(t) - 8, c.height - pad + 14);
  for (let t = 0; t <= ymax + 1e-9; t += 0.5) g.fillText(t.toFixed(1), 6, sy(t) + 4);
  return { sx, sy };
}

function polyline(g, pts, sx, sy, color) {
  g.strokeStyle = color;
  g.beginPath();
  pts.forEach(([x, y], i) => (i ? g.lineTo(sx(x), sy(y)) : g.moveTo(sx(x), sy(y))));
  g.stroke();
}

function drawBounds() {
  const curves = JSON.parse(boundCurves(200));
  const c = $("bounds");
  const g = c.getContext("2d");
  const { sx, sy } = axes(g, c, Math.PI, Math.PI / 2, "thickness", "radius");
  curves.forEach((curve, i) => polyline(g, curve.points, sx, sy, COLORS[i % COLORS.length]));
  $("bounds-legend").innerHTML = curves
    .map((curve, i) => `<span><i style="background:${COLORS[i % COLORS.length]}"></i>${curve.name}</span>`)
    .join("");
}

function drawChain() {
  const delta = Number($("chain-delta").value);
  $("chain-delta-out").textContent = delta.toFixed(3);
  let chain;
  try {
    chain = JSON.parse(sigmaChain(delta, 200));
    showError(null);
  } catch (e) {
    showError(e);
    return;
  }
  const c = $("chain");
  const g = c.getContext("2d");
  const ys = chain.points.map((p) => p[1]);
  const lo = Math.min(...ys), hi = Math.max(...ys);
  const span = Math.max(hi - lo, 1e-6);
  const pad = 36;
  const a0 = chain.alpha_eq, a1 = Math.PI / 4;
  const sx = (a) => pad + ((a - a0) / Math.max(a1 - a0, 1e-9)) * (c.width - pad - 10);
  const sy = (y) => c.height - pad - ((y - lo) / span) * (c.height - pad - 20);
  g.clearRect(0, 0, c.width, c.height);
  g.fillStyle = "#444";
  g.fillText(`α from ${a0.toFixed(4)} (equilateral) to π/4 (quarter disk)`, pad, c.height - 10);
  g.fillText(`σ ∈ [${lo.toFixed(5)}, ${hi.toFixed(5)}]`, pad, 14);
  polyline(g, chain.points, sx, sy, COLORS[0]);
  $("chain-note").textContent =
    `ends: σ(α_eq) = ${fmt(chain.equilateral_end)}, σ(π/4) = ${fmt(chain.quarter_end)}; ` +
    `interior maximum ${fmt(hi)}`;
}

await init();
for (const id of ["kind", "delta", "k", "n"]) $(id).addEventListener("input", drawShape);
$("chain-delta").addEventListener("input", drawChain);
drawShape();
drawBounds();
drawChain();
