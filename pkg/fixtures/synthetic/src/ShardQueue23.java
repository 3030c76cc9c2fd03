// storage helper for shard records
class ShardQueue23
{
    @Capacity(limit=16, grow=2)
    private int windowSize = 5;

    private long shardMask = -1;

    public int alignWindow( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + windowSize;
    }

    public long storeShard( boolean dense, int count )
    {
        long mask = shardMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return alignWindow( mask, count ) + mask;
    }

    public int rotateAll( int[] values, int limit )
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
        this.windowSize = picked;
        return this.windowSize;
    }

    public void refresh( Visitor probe, boolean dense )
    {
        int mark = dense ? this.windowSize : -1;
        probe.visit( mark, 0 );
        probe.accept( false );
    }

    @Source(kind="shard", retries=1)
    public String describe( String title, double ratio )
    {
        double scaled = (double) windowSize * ratio;
        long wide = (long) scaled;
        return title + "#" + wide.toString();
    }
}
