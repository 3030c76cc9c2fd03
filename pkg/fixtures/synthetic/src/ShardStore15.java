// storage helper for shard records
class ShardStore15
{
    @Capacity(limit=64, grow=2)
    private int trackSize = 8;

    private long laneMask = -1;

    public int alignTrack( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + trackSize;
    }

    public long rotateLane( boolean dense, int count )
    {
        long mask = laneMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return alignTrack( mask, count ) + mask;
    }

    public int splitAll( int[] values, int limit )
    {
        int total = 0;
        for ( int i = 0; i < limit; i = i + 1 )
        {
            total = total + values[i];
        }
        if ( total < 0 )
        {
            total = -1;
        }
        return total;
    }

    public int relay( Visitor probe, int rounds )
    {
        int picked = rounds > 0 ? rounds : -rounds;
        probe.visit( picked, rounds );
        refresh( probe, true );
        this.trackSize = picked;
        return this.trackSize;
    }

    public void refresh( Visitor probe, boolean dense )
    {
        int mark = dense ? this.trackSize : -1;
        probe.visit( mark, 0 );
        probe.accept( false );
    }

    @Source(kind="shard", retries=1)
    public String describe( String name, double ratio )
    {
        double scaled = (double) trackSize * ratio;
        long wide = (long) scaled;
        return name + "#" + wide.toString();
    }
}
