import init, { curve, theorem_gap, relations, relation_grid } from "./pkg/hyperd_wasm.js";

const $ = (sec, sel) => document.querySelector(`#${sec} ${sel}`);
const num = (sec, name) => Number($(sec, `[name=${name}]`).value);
const str = (sec, name) => $(sec, `[name=${name}]`).value;
const fmt = x => x.toExponential(6);

function axes(ctx, w, h, pad) {
  ctx.clearRect(0, 0, w, h);
  ctx.strokeStyle = "#999";
  ctx.strokeRect(pad, pad, w - 2 * pad, h - 2 * pad);
}

function plotCurve() {
  const canvas = $("curve", "canvas");
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  const pad = 30, n = 300;
  let pts;
  try {
    pts = curve(str("curve", "eq"), str("curve", "func"),
      num("curve", "alpha"), num("curve", "theta"), num("curve", "beta"), num("curve", "mu"),
      num("curve", "from_re"), num("curve", "from_im"), num("curve", "to_re"), num("curve", "to_im"), n);
  } catch (e) {
    axes(ctx, w, h, pad);
    ctx.fillStyle = "#b00";
    ctx.fillText(String(e), pad + 5, pad + 15);
    return;
  }
  const vals = [];
  for (let i = 0; i < n; i++) vals.push(pts[3 * i], pts[3 * i + 1]);
  const finite = vals.filter(Number.isFinite);
  let lo = Math.min(...finite), hi = Math.max(...finite);
  if (!(hi > lo)) { lo -= 1; hi += 1; }
  const x = i => pad + (w - 2 * pad) * i / (n - 1);
  const y = v => h - pad - (h - 2 * pad) * (v - lo) / (hi - lo);
  axes(ctx, w, h, pad);
  ctx.fillStyle = "#444";
  ctx.fillText(hi.toPrecision(4), 2, pad);
  ctx.fillText(lo.toPrecision(4), 2, h - pad);
  for (const [k, color] of [[0, "#1f77b4"], [1, "#ff7f0e"]]) {
    ctx.strokeStyle = color;
    ctx.beginPath();
    let pen = false;
    for (let i = 0; i < n; i++) {
      const v = pts[3 * i + k];
      if (!Number.isFinite(v)) { pen = false; continue; }
      pen ? ctx.lineTo(x(i), y(v)) : ctx.moveTo(x(i), y(v));
      pen = true;
    }
    ctx.stroke();
  }
}

function compare() {
  const out = $("theorem", "pre");
  try {
    const [ar, ai, br, bi, gap] = theorem_gap(str("theorem", "eq"), num("theorem", "m"),
      num("theorem", "theta"), num("theorem", "beta"), num("theorem", "mu"),
      num("theorem", "z_re"), num("theorem", "z_im"));
    out.className = "";
    out.textContent =
      `log + D form : ${fmt(ar)} ${ai < 0 ? "-" : "+"} ${fmt(Math.abs(ai))}i\n` +
      `α → m limit  : ${fmt(br)} ${bi < 0 ? "-" : "+"} ${fmt(Math.abs(bi))}i\n` +
      `relative gap : ${gap.toExponential(2)}`;
  } catch (e) {
    out.className = "err";
    out.textContent = String(e);
  }
}

function explore() {
  const id = str("relations", "id");
  const canvas = $("relations", "canvas");
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  const pad = 30;
  const g = relation_grid(id, 25);
  const zs = [];
  for (let i = 0; i < g.length; i += 3) zs.push({ re: g[i], im: g[i + 1], r: g[i + 2] });
  const span = Math.max(1e-3, ...zs.map(p => Math.max(Math.abs(p.re), Math.abs(p.im)))) * 1.1;
  const sx = v => w / 2 + (w / 2 - pad) * v / span;
  const sy = v => h / 2 - (h / 2 - pad) * v / span;
  axes(ctx, w, h, pad);
  ctx.strokeStyle = "#ddd";
  ctx.beginPath();
  ctx.moveTo(pad, h / 2); ctx.lineTo(w - pad, h / 2);
  ctx.moveTo(w / 2, pad); ctx.lineTo(w / 2, h - pad);
  ctx.stroke();
  for (const p of zs) {
    // green at 1e-16, red at the 1e-8 tolerance
    const t = Math.min(1, Math.max(0, (Math.log10(p.r || 1e-17) + 16) / 8));
    ctx.fillStyle = `rgb(${Math.round(255 * t)}, ${Math.round(160 * (1 - t))}, 40)`;
    ctx.beginPath();
    ctx.arc(sx(p.re), sy(p.im), 5, 0, 2 * Math.PI);
    ctx.fill();
  }
  const worst = Math.max(...zs.map(p => p.r));
  $("relations", "pre").textContent =
    `${zs.length} points in the z-plane (axes ±${span.toPrecision(3)}), worst scaled residual ${worst.toExponential(2)}`;
}

await init();
$("curve", "button").addEventListener("click", plotCurve);
$("theorem", "button").addEventListener("click", compare);
const select = $("relations", "select");
for (const line of relations().split("\n")) {
  const [id, kind, family] = line.split(" ");
  select.add(new Option(`${id}  (${kind}, ${family})`, id));
}
select.addEventListener("change", explore);
plotCurve();
compare();
explore();
