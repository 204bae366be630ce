import type { JobView } from "./api.js";

/**
 * Poll a job until it leaves the queue: resolves on `done`, rejects with the
 * backend's error message on `failed`. `onUpdate` fires for every state seen.
 */
export function pollJob(
  getJob: (id: string) => Promise<JobView>,
  jobId: string,
  opts: { intervalMs?: number; onUpdate?: (job: JobView) => void } = {},
): Promise<JobView> {
  const intervalMs = opts.intervalMs ?? 500;
  return new Promise((resolve, reject) => {
    const timer = setInterval(async () => {
      let job: JobView;
      try {
        job = await getJob(jobId);
      } catch (err) {
        clearInterval(timer);
        reject(err);
        return;
      }
      opts.onUpdate?.(job);
      if (job.state === "done") {
        clearInterval(timer);
        resolve(job);
      } else if (job.state === "failed") {
        clearInterval(timer);
        reject(new Error(job.error ?? "mining job failed"));
      }
    }, intervalMs);
  });
}
