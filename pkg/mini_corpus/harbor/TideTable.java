package harbor.tide;

public class TideTable {

    private final SampleSeries series;

    TideTable(SampleSeries series) {
        this.series = series;
    }

    public double at(long epoch) {
        return interpolate(epoch);
    }

    /* linear interpolation between samples */
    // todo implement spline interpolation, this is a placeholder
    private double interpolate(long epoch) {
        Sample lo = series.floorOf(epoch);
        Sample hi = series.ceilOf(epoch);
        return lo.value() + (hi.value() - lo.value()) * 0.5;
    }
}
