import init, {
  signPattern,
  analyze,
  partialReconstruction,
  generateSeries,
} from "./pkg/squarewave_wasm.js";

const $ = (id) => document.getElementById(id);

function drawPattern() {
  const n = Number($("pn").value);
  $("pn-val").textContent = n;
  const cells = signPattern(n);
  const canvas = $("pattern");
  const ctx = canvas.getContext("2d");
  const size = canvas.width / n;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  for (let i = 0; i < n; i++) {
    for (let j = 0; j < n; j++) {
      ctx.fillStyle = cells[i * n + j] > 0 ? "#fafafa" : "#2b3a55";
      ctx.fillRect(j * size, i * size, Math.ceil(size), Math.ceil(size));
    }
  }
}

function parseValues() {
  return Float64Array.from(
    $("values").value.split(/[\s,;]+/).filter((t) => t.length > 0).map(Number),
  );
}

function bars(canvas, xs, ys) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  ctx.clearRect(0, 0, w, h);
  const peak = Math.max(1e-300, ...ys.map(Math.abs));
  const mid = h / 2;
  const bw = Math.max(1, (w - 20) / ys.length - 1);
  ctx.strokeStyle = "#999";
  ctx.beginPath();
  ctx.moveTo(0, mid);
  ctx.lineTo(w, mid);
  ctx.stroke();
  ctx.fillStyle = "#3465a4";
  ys.forEach((y, k) => {
    const bh = (y / peak) * (mid - 10);
    ctx.fillRect(10 + k * (bw + 1), bh > 0 ? mid - bh : mid, bw, Math.abs(bh));
  });
  ctx.fillStyle = "#555";
  ctx.fillText(`f = ${xs[0].toFixed(6)} Hz`, 10, h - 4);
  const last = `f = ${xs[xs.length - 1].toFixed(6)} Hz`;
  ctx.fillText(last, w - 10 - ctx.measureText(last).width, h - 4);
  ctx.fillText(`max |C| = ${peak.toFixed(3)}`, 10, 12);
}

function lines(canvas, series) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  ctx.clearRect(0, 0, w, h);
  const all = series.flatMap((s) => Array.from(s.values));
  const lo = Math.min(...all);
  const hi = Math.max(...all);
  const span = hi - lo || 1;
  const n = series[0].values.length;
  const y = (v) => h - 10 - ((h - 20) * (v - lo)) / span;
  for (const s of series) {
    ctx.strokeStyle = s.color;
    ctx.lineWidth = s.width;
    ctx.beginPath();
    s.values.forEach((v, k) => {
      // samples are midpoint values of each subinterval, drawn as steps
      const x0 = 10 + ((w - 20) * k) / n;
      const x1 = 10 + ((w - 20) * (k + 1)) / n;
      if (k === 0) ctx.moveTo(x0, y(v));
      else ctx.lineTo(x0, y(v));
      ctx.lineTo(x1, y(v));
    });
    ctx.stroke();
  }
}

let current = null;

function runAnalysis() {
  const values = parseValues();
  const dt = Number($("dt").value);
  try {
    const result = analyze(values, dt);
    current = { values, dt };
    $("stats").classList.remove("err");
    $("stats").textContent =
      `n = ${values.length}   max|V - V_comp| = ${result.maxAbsError.toExponential(3)}` +
      `   residual = ${result.residualInfNorm.toExponential(3)}` +
      `   (f1; C1) = (${result.frequencies[0].toFixed(6)}; ${result.coefficients[0].toFixed(6)})`;
    bars($("spectrum"), result.frequencies, result.coefficients);
    $("keep").max = values.length;
    $("keep").value = values.length;
    drawReconstruction();
    result.free();
  } catch (e) {
    $("stats").classList.add("err");
    $("stats").textContent = String(e.message ?? e);
  }
}

function drawReconstruction() {
  if (!current) return;
  const k = Number($("keep").value);
  $("keep-val").textContent = k;
  const rebuilt = partialReconstruction(current.values, current.dt, k);
  lines($("recon"), [
    { values: current.values, color: "#bbb", width: 3 },
    { values: rebuilt, color: "#3465a4", width: 1.5 },
  ]);
}

function generate() {
  const n = Number($("gn").value);
  const dt = Number($("dt").value);
  try {
    const values = generateSeries(Number($("seed").value) >>> 0, n, n / dt);
    $("values").value = Array.from(values).join(", ");
    runAnalysis();
  } catch (e) {
    $("stats").classList.add("err");
    $("stats").textContent = String(e.message ?? e);
  }
}

await init();
$("pn").addEventListener("input", drawPattern);
$("run").addEventListener("click", runAnalysis);
$("gen").addEventListener("click", generate);
$("keep").addEventListener("input", drawReconstruction);
drawPattern();
runAnalysis();
