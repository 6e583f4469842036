/* Browser entry point. Service base URL comes from the host page. */

import { ApiClient } from "./api.js";
import { createApp } from "./app.js";

declare global {
  // eslint-disable-next-line no-var
  var LITIGACOST_API_BASE: string | undefined;
}

const root = document.getElementById("app");
if (root) {
  const baseUrl = globalThis.LITIGACOST_API_BASE ?? "";
  createApp({ root, client: new ApiClient(baseUrl) });
}
